#pragma once

#include "replica/schedule.hpp"
#include "replica/types.hpp"

#include <span>
#include <vector>

namespace replica {

/// Piecewise-constant instantaneous rate: values[i] applies on
/// (node_times[i-1], node_times[i]] with node_times[-1] = anchor, and the last
/// value extends flat beyond the final node.
class PiecewiseFlatRate {
  public:
    PiecewiseFlatRate(Time anchor, std::vector<Time> node_times, std::vector<Real> values);

    Time anchor() const noexcept { return anchor_; }
    std::span<const Time> node_times() const noexcept { return node_times_; }
    std::span<const Real> values() const noexcept { return values_; }

    /// Integral of the rate over [anchor, t]; TimeBeforeAnchor when t < anchor.
    Real integral(Time t) const;
    /// Integral over [from, to], from <= to.
    Real integral(Time from, Time to) const;

    bool operator==(const PiecewiseFlatRate& other) const {
        return anchor_ == other.anchor_ && node_times_ == other.node_times_ &&
               values_ == other.values_;
    }

  private:
    Time anchor_;
    std::vector<Time> node_times_;
    std::vector<Real> values_;
    std::vector<Real> cumulative_; // integral up to each node
};

/// Deterministic discount curve P(t0, t) = exp(-int r).
class DiscountCurve {
  public:
    DiscountCurve(Time t0, std::vector<Time> node_times, std::vector<Rate> short_rates);
    static DiscountCurve flat(Rate rate, Time t0 = 0.0);

    Time t0() const noexcept { return rates_.anchor(); }
    const PiecewiseFlatRate& short_rates() const noexcept { return rates_; }

    Real discount(Time t) const;
    /// P(from, to) = P(t0, to) / P(t0, from), computed from the rate integral.
    Real discount(Time from, Time to) const;

    bool operator==(const DiscountCurve&) const = default;

  private:
    PiecewiseFlatRate rates_;
};

/// Issuer survival curve Q(t0, t) = exp(-int lambda), hazards >= 0.
class SurvivalCurve {
  public:
    SurvivalCurve(Time t0, std::vector<Time> node_times, std::vector<Rate> hazards);
    static SurvivalCurve flat(Rate hazard, Time t0 = 0.0);

    Time t0() const noexcept { return hazards_.anchor(); }
    const PiecewiseFlatRate& hazards() const noexcept { return hazards_; }

    Real survival(Time t) const;
    Real survival(Time from, Time to) const;

    bool operator==(const SurvivalCurve&) const = default;

  private:
    PiecewiseFlatRate hazards_;
};

Real discount_factor(const DiscountCurve& curve, Time t);
Real survival_prob(const SurvivalCurve& curve, Time t);

/// Simple-compounded forward over (start, end]; the model's floating fixing
/// for that period. InvalidInterval unless t0 <= start < end.
Rate forward_rate(const DiscountCurve& curve, Time start, Time end);

/// Law of the default bucket on a schedule: default in (t_{k-1}, t_k] is
/// effective at t_k^- with probability Q(t_{k-1}) - Q(t_k).
struct DefaultDistribution {
    std::vector<Real> bucket_probs; // k = 1..N stored at [k-1]
    Real survival_prob = 1.0;
};

DefaultDistribution default_distribution(const SurvivalCurve& curve, const Schedule& schedule);

inline constexpr Rate kMaxCalibrationHazard = 10.0;

/// Flat hazard whose par CDS spread reproduces the quote within 1e-12.
/// Requires 0 <= recovery < 1 and quote >= 0; QuoteUnattainable when no
/// hazard in [0, 10] matches.
SurvivalCurve calibrate_flat_hazard(const DiscountCurve& discount, const Schedule& schedule,
                                    Spread cds_quote, Real recovery);

} // namespace replica
