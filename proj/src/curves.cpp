#include "replica/curves.hpp"

#include "replica/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace replica {

PiecewiseFlatRate::PiecewiseFlatRate(Time anchor, std::vector<Time> node_times,
                                     std::vector<Real> values)
    : anchor_(anchor), node_times_(std::move(node_times)), values_(std::move(values)) {
    require(std::isfinite(anchor_), ErrorCode::InvalidInput, "curve anchor must be finite");
    require(!node_times_.empty(), ErrorCode::InvalidInput, "curve needs at least one node");
    require(node_times_.size() == values_.size(), ErrorCode::InvalidInput,
            fmt::format("{} node times but {} values", node_times_.size(), values_.size()));
    cumulative_.reserve(node_times_.size());
    Time previous = anchor_;
    Real total = 0.0;
    for (std::size_t i = 0; i < node_times_.size(); ++i) {
        require(std::isfinite(node_times_[i]) && node_times_[i] > previous,
                ErrorCode::InvalidInput,
                fmt::format("curve node {} ({}) is not after {}", i, node_times_[i], previous));
        require(std::isfinite(values_[i]), ErrorCode::InvalidInput,
                fmt::format("curve value {} is not finite", i));
        total += values_[i] * (node_times_[i] - previous);
        cumulative_.push_back(total);
        previous = node_times_[i];
    }
}

Real PiecewiseFlatRate::integral(Time t) const {
    require(t >= anchor_, ErrorCode::TimeBeforeAnchor,
            fmt::format("time {} is before the curve anchor {}", t, anchor_));
    // first node >= t: t lies in (node_times_[i-1], node_times_[i]]
    const auto it = std::lower_bound(node_times_.begin(), node_times_.end(), t);
    if (it == node_times_.end())
        return cumulative_.back() + values_.back() * (t - node_times_.back());
    const auto i = static_cast<std::size_t>(it - node_times_.begin());
    const Time start = i == 0 ? anchor_ : node_times_[i - 1];
    const Real base = i == 0 ? 0.0 : cumulative_[i - 1];
    return base + values_[i] * (t - start);
}

Real PiecewiseFlatRate::integral(Time from, Time to) const {
    require(from <= to, ErrorCode::InvalidInterval,
            fmt::format("integral bounds reversed: {} > {}", from, to));
    return integral(to) - integral(from);
}

DiscountCurve::DiscountCurve(Time t0, std::vector<Time> node_times, std::vector<Rate> short_rates)
    : rates_(t0, std::move(node_times), std::move(short_rates)) {}

DiscountCurve DiscountCurve::flat(Rate rate, Time t0) { return DiscountCurve(t0, {t0 + 1.0}, {rate}); }

Real DiscountCurve::discount(Time t) const {
    if (t == t0())
        return 1.0;
    return std::exp(-rates_.integral(t));
}

Real DiscountCurve::discount(Time from, Time to) const { return discount(to) / discount(from); }

SurvivalCurve::SurvivalCurve(Time t0, std::vector<Time> node_times, std::vector<Rate> hazards)
    : hazards_(t0, std::move(node_times), std::move(hazards)) {
    for (Rate h : hazards_.values())
        require(h >= 0.0, ErrorCode::InvalidInput, fmt::format("negative hazard rate {}", h));
}

SurvivalCurve SurvivalCurve::flat(Rate hazard, Time t0) { return SurvivalCurve(t0, {t0 + 1.0}, {hazard}); }

Real SurvivalCurve::survival(Time t) const {
    if (t == t0())
        return 1.0;
    return std::exp(-hazards_.integral(t));
}

Real SurvivalCurve::survival(Time from, Time to) const { return survival(to) / survival(from); }

Real discount_factor(const DiscountCurve& curve, Time t) { return curve.discount(t); }

Real survival_prob(const SurvivalCurve& curve, Time t) { return curve.survival(t); }

Rate forward_rate(const DiscountCurve& curve, Time start, Time end) {
    require(start >= curve.t0() && start < end, ErrorCode::InvalidInterval,
            fmt::format("forward interval ({}, {}] is empty or before t0", start, end));
    return (curve.discount(start) / curve.discount(end) - 1.0) / (end - start);
}

DefaultDistribution default_distribution(const SurvivalCurve& curve, const Schedule& schedule) {
    DefaultDistribution law;
    law.bucket_probs.reserve(schedule.size());
    Real previous = curve.survival(schedule.t0());
    for (Time t : schedule.dates()) {
        const Real q = curve.survival(t);
        law.bucket_probs.push_back(previous - q);
        previous = q;
    }
    law.survival_prob = previous;
    return law;
}

} // namespace replica
