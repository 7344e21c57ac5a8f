#pragma once

#include "replica/curves.hpp"
#include "replica/pricers.hpp"
#include "replica/schedule.hpp"
#include "replica/types.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace replica {

enum class Leg { Bond, Repo, AssetSwap, Cds };
/// Rows of the replica cashflow table.
enum class Row { Inception, Survival, Maturity, Default };

std::string_view to_string(Leg leg) noexcept;
std::string_view to_string(Row row) noexcept;

/// One default scenario: default effective at t_k^- for bucket k in 1..N, or
/// survival to the last date (bucket 0).
struct DefaultScenario {
    std::size_t default_bucket = 0;
    Real probability = 0.0;

    bool survives() const noexcept { return default_bucket == 0; }
};

/// Buckets ascending, survival last; N + 1 scenarios in total.
std::vector<DefaultScenario> enumerate_scenarios(const SurvivalCurve& survival,
                                                 const Schedule& schedule);

struct CashflowEntry {
    Time time = 0.0;
    Leg leg = Leg::Bond;
    Row row = Row::Inception;
    Real amount = 0.0; // bond holder's side, unit notional
};

struct CashflowLedger {
    std::vector<CashflowEntry> entries;

    Real present_value(const DiscountCurve& discount) const;
    Real present_value(const DiscountCurve& discount, Leg leg) const;
    /// Undiscounted total of one cell of the table (leg, row), all dates.
    Real total(Leg leg, Row row) const;
    /// PV of bond + repo + asset swap minus PV of the CDS protection sale.
    Real residual(const DiscountCurve& discount) const;
};

/// Cashflows of the replica (bond bought, financed by repo, hedged by the
/// asset swap) and of the CDS sold, for one scenario. The default unwind is
/// booked as recovery on the bond leg and the repo repaid at par on the repo
/// leg, netting to -LGD. With the clause off the swap is closed out at
/// mtm_{t_k^-}. Scenario buckets refer to the schedule truncated at the repo
/// maturity. InconsistentSpecs if the repo does not fit the bond schedule.
CashflowLedger portfolio_ledger(const DiscountCurve& discount, const SurvivalCurve& survival,
                                const BondSpec& bond, const RepoSpec& repo, Spread asw_spread,
                                Spread cds_spread, bool clause_enabled,
                                const DefaultScenario& scenario);

struct ScenarioResidual {
    DefaultScenario scenario;
    Time event_time = 0.0;      // t_k on default, T_r on survival
    Real residual = 0.0;        // discounted to t0
    Real discounted_mtm = 0.0;  // P(t_k) mtm_{t_k^-} when the swap is closed out
};

struct ReplicationReport {
    bool clause_enabled = true;
    Time repo_maturity = 0.0;
    Real forward_price = 1.0;
    Spread asw_spread = 0.0;
    Spread repo_spread = 0.0;
    Spread cds_spread = 0.0;
    std::vector<ScenarioResidual> scenarios;
    Real expected_residual = 0.0;
    Real max_abs_residual = 0.0;
};

/// Prices the asset swap at par (cancelable when the clause is on, standard
/// otherwise), sets s_cds = s_asw + s_repo, and evaluates every scenario.
ReplicationReport replication_report(const DiscountCurve& discount, const SurvivalCurve& survival,
                                     const BondSpec& bond, const RepoSpec& repo,
                                     bool clause_enabled);

struct MonteCarloEstimate {
    Real estimate = 0.0;
    Real std_error = 0.0;
    std::size_t paths = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinMonteCarloPaths = 1000;

/// Sampled mean and standard error of the scenario residual. Each path draws
/// from its own generator seeded by (seed, path index), so the result does
/// not depend on how paths are split across threads.
MonteCarloEstimate mc_check(const DiscountCurve& discount, const SurvivalCurve& survival,
                            const BondSpec& bond, const RepoSpec& repo, bool clause_enabled,
                            std::size_t paths, std::uint64_t seed,
                            std::optional<unsigned> threads = std::nullopt);

} // namespace replica
