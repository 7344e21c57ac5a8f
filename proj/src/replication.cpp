#include "replica/replication.hpp"

#include "replica/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace replica {

std::string_view to_string(Leg leg) noexcept {
    switch (leg) {
    case Leg::Bond:
        return "bond";
    case Leg::Repo:
        return "repo";
    case Leg::AssetSwap:
        return "asset_swap";
    case Leg::Cds:
        return "cds";
    }
    return "unknown";
}

std::string_view to_string(Row row) noexcept {
    switch (row) {
    case Row::Inception:
        return "inception";
    case Row::Survival:
        return "survival";
    case Row::Maturity:
        return "maturity";
    case Row::Default:
        return "default";
    }
    return "unknown";
}

namespace {

// 1-based index of the repo maturity on the bond grid.
std::size_t check_repo(const BondSpec& bond, const RepoSpec& repo) {
    const Schedule& schedule = bond.schedule();
    const std::size_t m = schedule.index_of(repo.maturity);
    require(m != 0, ErrorCode::InconsistentSpecs,
            fmt::format("repo maturity {} is not a bond payment date", repo.maturity));
    require(std::isfinite(repo.forward_price) && repo.forward_price > 0.0,
            ErrorCode::InconsistentSpecs,
            fmt::format("forward price {} must be positive", repo.forward_price));
    require(std::isfinite(repo.spread), ErrorCode::InconsistentSpecs, "repo spread must be finite");
    require(m < schedule.size() || std::abs(repo.forward_price - 1.0) <= 1e-12,
            ErrorCode::InconsistentSpecs,
            fmt::format("a repo to the bond maturity returns par, not {}", repo.forward_price));
    return m;
}

BondSpec truncated_bond(const BondSpec& bond, std::size_t m) {
    return BondSpec(bond.coupon(), bond.recovery(),
                    truncate_schedule(bond.schedule(), bond.schedule().date(m)));
}

} // namespace

std::vector<DefaultScenario> enumerate_scenarios(const SurvivalCurve& survival,
                                                 const Schedule& schedule) {
    const DefaultDistribution law = default_distribution(survival, schedule);
    std::vector<DefaultScenario> scenarios;
    scenarios.reserve(schedule.size() + 1);
    for (std::size_t k = 1; k <= schedule.size(); ++k)
        scenarios.push_back({k, law.bucket_probs[k - 1]});
    scenarios.push_back({0, law.survival_prob});
    return scenarios;
}

Real CashflowLedger::present_value(const DiscountCurve& discount) const {
    Real pv = 0.0;
    for (const auto& e : entries)
        pv += e.amount * discount.discount(e.time);
    return pv;
}

Real CashflowLedger::present_value(const DiscountCurve& discount, Leg leg) const {
    Real pv = 0.0;
    for (const auto& e : entries)
        if (e.leg == leg)
            pv += e.amount * discount.discount(e.time);
    return pv;
}

Real CashflowLedger::total(Leg leg, Row row) const {
    Real sum = 0.0;
    for (const auto& e : entries)
        if (e.leg == leg && e.row == row)
            sum += e.amount;
    return sum;
}

Real CashflowLedger::residual(const DiscountCurve& discount) const {
    Real replica = 0.0;
    Real cds = 0.0;
    for (const auto& e : entries) {
        const Real pv = e.amount * discount.discount(e.time);
        (e.leg == Leg::Cds ? cds : replica) += pv;
    }
    return replica - cds;
}

CashflowLedger portfolio_ledger(const DiscountCurve& d, const SurvivalCurve& q,
                                const BondSpec& bond, const RepoSpec& repo, Spread asw_spread,
                                Spread cds_spread, bool clause_enabled,
                                const DefaultScenario& scenario) {
    const std::size_t m = check_repo(bond, repo);
    require(scenario.default_bucket <= m, ErrorCode::InconsistentSpecs,
            fmt::format("default bucket {} lies beyond the repo maturity bucket {}",
                        scenario.default_bucket, m));
    const Schedule& schedule = bond.schedule();
    const Time t0 = schedule.t0();
    const Real c = bond.coupon();
    const Real x = repo.forward_price;
    const Real b0 = price_risky_bond(d, q, bond);

    CashflowLedger ledger;
    auto& out = ledger.entries;
    out.push_back({t0, Leg::Bond, Row::Inception, -b0});
    out.push_back({t0, Leg::Repo, Row::Inception, x});
    out.push_back({t0, Leg::AssetSwap, Row::Inception, b0 - x});

    const std::size_t last_paid = scenario.survives() ? m : scenario.default_bucket - 1;
    for (std::size_t k = 1; k <= last_paid; ++k) {
        const Time t = schedule.date(k);
        const Time theta = schedule.accrual(k);
        const Rate floating = forward_rate(d, schedule.date(k - 1), t);
        out.push_back({t, Leg::Bond, Row::Survival, c * theta});
        out.push_back({t, Leg::Repo, Row::Survival, (-floating + repo.spread) * theta});
        out.push_back({t, Leg::AssetSwap, Row::Survival, (-c + floating + asw_spread) * theta});
        out.push_back({t, Leg::Cds, Row::Survival, cds_spread * theta});
    }

    if (scenario.survives()) {
        const Time t = schedule.date(m);
        out.push_back({t, Leg::Bond, Row::Maturity, forward_bond_price(d, q, bond, t)});
        out.push_back({t, Leg::Repo, Row::Maturity, -x});
        return ledger;
    }

    const std::size_t k = scenario.default_bucket;
    const Time t = schedule.date(k);
    out.push_back({t, Leg::Bond, Row::Default, bond.recovery()});
    out.push_back({t, Leg::Repo, Row::Default, -1.0});
    if (!clause_enabled) {
        const auto mtm = mtm_profile(d, q, truncated_bond(bond, m), asw_spread);
        out.push_back({t, Leg::AssetSwap, Row::Default, mtm.values[k - 1]});
    }
    out.push_back({t, Leg::Cds, Row::Default, -bond.lgd()});
    return ledger;
}

ReplicationReport replication_report(const DiscountCurve& d, const SurvivalCurve& q,
                                     const BondSpec& bond, const RepoSpec& repo,
                                     bool clause_enabled) {
    const std::size_t m = check_repo(bond, repo);
    const bool to_maturity = m == bond.schedule().size();

    ReplicationReport report;
    report.clause_enabled = clause_enabled;
    report.repo_maturity = bond.schedule().date(m);
    report.forward_price = repo.forward_price;
    report.repo_spread = repo.spread;
    if (clause_enabled)
        report.asw_spread = to_maturity ? par_cancelable_asw_spread(d, q, bond).spread
                                        : par_cancelable_asw_spread_generalized(
                                              d, q, bond, report.repo_maturity, repo.forward_price)
                                              .spread;
    else
        report.asw_spread =
            par_asw_spread_generalized(d, q, bond, report.repo_maturity, repo.forward_price).spread;
    report.cds_spread = report.asw_spread + repo.spread;

    const Schedule window = truncate_schedule(bond.schedule(), report.repo_maturity);
    for (const auto& scenario : enumerate_scenarios(q, window)) {
        const CashflowLedger ledger = portfolio_ledger(d, q, bond, repo, report.asw_spread,
                                                       report.cds_spread, clause_enabled, scenario);
        ScenarioResidual row;
        row.scenario = scenario;
        row.event_time = scenario.survives() ? report.repo_maturity
                                             : window.date(scenario.default_bucket);
        row.residual = ledger.residual(d);
        if (!scenario.survives())
            row.discounted_mtm =
                ledger.total(Leg::AssetSwap, Row::Default) * d.discount(row.event_time);
        report.expected_residual += scenario.probability * row.residual;
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(row.residual));
        report.scenarios.push_back(row);
    }
    return report;
}

MonteCarloEstimate mc_check(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                            const RepoSpec& repo, bool clause_enabled, std::size_t paths,
                            std::uint64_t seed, std::optional<unsigned> threads) {
    require(paths >= kMinMonteCarloPaths, ErrorCode::InvalidInput,
            fmt::format("at least {} paths required, got {}", kMinMonteCarloPaths, paths));
    const ReplicationReport report = replication_report(d, q, bond, repo, clause_enabled);

    // Scenario order: buckets ascending, survival last.
    std::vector<Real> cumulative;
    Real running = 0.0;
    for (const auto& row : report.scenarios) {
        if (row.scenario.survives())
            break;
        running += row.scenario.probability;
        cumulative.push_back(running);
    }
    const std::size_t survival_row = report.scenarios.size() - 1;

    std::vector<Real> samples(paths);
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto path = static_cast<std::uint64_t>(i);
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
            std::mt19937_64 engine(seq);
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const std::size_t row = it == cumulative.end()
                                        ? survival_row
                                        : static_cast<std::size_t>(it - cumulative.begin());
            samples[i] = report.scenarios[row].residual;
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads.value_or(std::thread::hardware_concurrency()),
                                        static_cast<unsigned>(paths / kMinMonteCarloPaths)));
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (paths + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(paths, begin + chunk);
            if (begin < end)
                pool.emplace_back(run, begin, end);
        }
    }

    Real sum = 0.0;
    for (Real x : samples)
        sum += x;
    const Real mean = sum / static_cast<Real>(paths);
    Real squares = 0.0;
    for (Real x : samples)
        squares += (x - mean) * (x - mean);
    const Real variance = squares / static_cast<Real>(paths - 1);
    return {mean, std::sqrt(variance / static_cast<Real>(paths)), paths, seed};
}

} // namespace replica
