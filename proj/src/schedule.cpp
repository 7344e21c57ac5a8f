#include "replica/schedule.hpp"

#include "replica/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace replica {

Schedule::Schedule(Time t0, std::vector<Time> dates, std::vector<Time> accruals)
    : t0_(t0), dates_(std::move(dates)), accruals_(std::move(accruals)) {
    require(std::isfinite(t0_), ErrorCode::InvalidInput, "schedule anchor must be finite");
    require(!dates_.empty(), ErrorCode::InvalidInput, "schedule needs at least one payment date");
    require(dates_.size() == accruals_.size(), ErrorCode::InvalidInput,
            fmt::format("{} dates but {} accruals", dates_.size(), accruals_.size()));
    Time previous = t0_;
    for (std::size_t i = 0; i < dates_.size(); ++i) {
        require(std::isfinite(dates_[i]) && dates_[i] > previous, ErrorCode::InvalidInput,
                fmt::format("payment date {} ({}) is not after {}", i + 1, dates_[i], previous));
        require(accruals_[i] > 0.0, ErrorCode::InvalidInput,
                fmt::format("accrual {} must be positive", i + 1));
        require(std::abs(accruals_[i] - (dates_[i] - previous)) <= 1e-12, ErrorCode::InvalidInput,
                fmt::format("accrual {} ({}) differs from the period length {}", i + 1,
                            accruals_[i], dates_[i] - previous));
        previous = dates_[i];
    }
}

std::size_t Schedule::index_of(Time t) const noexcept {
    for (std::size_t i = 0; i < dates_.size(); ++i)
        if (std::abs(dates_[i] - t) <= kGridTolerance)
            return i + 1;
    return 0;
}

Schedule build_schedule(Time t0, Time maturity, int frequency) {
    require(frequency == 1 || frequency == 2 || frequency == 4 || frequency == 12,
            ErrorCode::InvalidFrequency,
            fmt::format("frequency {} is not one of 1, 2, 4, 12", frequency));
    require(std::isfinite(t0) && std::isfinite(maturity) && maturity > t0, ErrorCode::InvalidInput,
            fmt::format("maturity {} must be after t0 {}", maturity, t0));
    const double periods = (maturity - t0) * frequency;
    const double rounded = std::round(periods);
    require(std::abs(periods - rounded) <= kGridTolerance, ErrorCode::NonIntegralPeriods,
            fmt::format("{} periods between {} and {} at frequency {}", periods, t0, maturity,
                        frequency));

    const auto n = static_cast<std::size_t>(rounded);
    const Time accrual = 1.0 / frequency;
    std::vector<Time> dates(n);
    std::vector<Time> accruals(n, accrual);
    for (std::size_t k = 1; k <= n; ++k)
        dates[k - 1] = t0 + static_cast<double>(k) / frequency;
    return Schedule(t0, std::move(dates), std::move(accruals));
}

Schedule truncate_schedule(const Schedule& schedule, Time repo_maturity) {
    const std::size_t m = schedule.index_of(repo_maturity);
    require(m != 0, ErrorCode::MaturityNotOnGrid,
            fmt::format("maturity {} is not a payment date", repo_maturity));
    auto dates = schedule.dates().first(m);
    auto accruals = schedule.accruals().first(m);
    return Schedule(schedule.t0(), {dates.begin(), dates.end()}, {accruals.begin(), accruals.end()});
}

} // namespace replica
