#pragma once

#include "replica/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace replica {

/// Payment grid t0 < t_1 < ... < t_N with accruals theta_k = t_k - t_{k-1},
/// shared by every instrument of the replica portfolio.
class Schedule {
  public:
    /// Throws InvalidInput unless the grid is strictly increasing, the
    /// accruals are positive, and each accrual matches its period length.
    Schedule(Time t0, std::vector<Time> dates, std::vector<Time> accruals);

    Time t0() const noexcept { return t0_; }
    std::size_t size() const noexcept { return dates_.size(); }
    std::span<const Time> dates() const noexcept { return dates_; }
    std::span<const Time> accruals() const noexcept { return accruals_; }

    /// 1-based, as in t_1..t_N; date(0) is the anchor t0.
    Time date(std::size_t k) const { return k == 0 ? t0_ : dates_.at(k - 1); }
    Time accrual(std::size_t k) const { return accruals_.at(k - 1); }
    Time maturity() const noexcept { return dates_.back(); }

    /// 1-based index of the date matching t within 1e-9, or 0 when none does.
    std::size_t index_of(Time t) const noexcept;

    bool operator==(const Schedule&) const = default;

  private:
    Time t0_;
    std::vector<Time> dates_;
    std::vector<Time> accruals_;
};

inline constexpr double kGridTolerance = 1e-9;

/// frequency must be one of 1, 2, 4, 12 payments per year.
Schedule build_schedule(Time t0, Time maturity, int frequency);

/// Prefix of the schedule ending at repo_maturity (MaturityNotOnGrid if off-grid).
Schedule truncate_schedule(const Schedule& schedule, Time repo_maturity);

} // namespace replica
