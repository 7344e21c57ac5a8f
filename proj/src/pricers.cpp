#include "replica/pricers.hpp"

#include "replica/errors.hpp"
#include "root_finding.hpp"

#include <fmt/format.h>

#include <cmath>

namespace replica {

namespace {

void check_recovery(Real recovery) {
    require(recovery >= 0.0 && recovery <= 1.0, ErrorCode::InvalidInput,
            fmt::format("recovery {} outside [0, 1]", recovery));
}

std::size_t grid_index(const Schedule& schedule, Time repo_maturity) {
    const std::size_t m = schedule.index_of(repo_maturity);
    require(m != 0, ErrorCode::MaturityNotOnGrid,
            fmt::format("repo maturity {} is not a payment date", repo_maturity));
    return m;
}

// sum theta_k P_k Q_k
Real defaultable_annuity(const PricingGrid& g) {
    Real a = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        a += g.accrual[k] * g.discount[k] * g.survival[k];
    return a;
}

// sum P_k (Q_{k-1} - Q_k)
Real default_leg(const PricingGrid& g) {
    Real v = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        v += g.discount[k] * g.default_prob(k);
    return v;
}

Real floater_value(const PricingGrid& g, Real recovery) {
    const std::size_t n = g.periods();
    Real coupons = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
        coupons += g.floating[k] * g.accrual[k] * g.discount[k] * g.survival[k];
    return coupons + g.discount[n] * g.survival[n] + recovery * default_leg(g);
}

Real risky_bond_value(const PricingGrid& g, Rate coupon, Real recovery) {
    const std::size_t n = g.periods();
    return coupon * defaultable_annuity(g) + g.discount[n] * g.survival[n] +
           recovery * default_leg(g);
}

// (-c + eps_{k-1} + s) theta_k for k = 1..N, at [k-1]
std::vector<Real> swap_period_flows(const PricingGrid& g, Rate coupon, Spread spread) {
    std::vector<Real> flows(g.periods());
    for (std::size_t k = 1; k <= g.periods(); ++k)
        flows[k - 1] = (-coupon + g.floating[k] + spread) * g.accrual[k];
    return flows;
}

SpreadResult make_spread(Real numerator, Real annuity) {
    require(annuity > 0.0, ErrorCode::DegenerateAnnuity,
            fmt::format("annuity {} is not positive", annuity));
    return {numerator / annuity, numerator, annuity};
}

SpreadResult cancelable_spread(const PricingGrid& g, Real recovery, Real forward_price) {
    return make_spread(forward_price - floater_value(g, recovery), defaultable_annuity(g));
}

} // namespace

BondSpec::BondSpec(Rate coupon, Real recovery, Schedule schedule)
    : coupon_(coupon), recovery_(recovery), schedule_(std::move(schedule)) {
    require(std::isfinite(coupon_), ErrorCode::InvalidInput, "coupon must be finite");
    check_recovery(recovery_);
}

PricingGrid::PricingGrid(const DiscountCurve& d, const SurvivalCurve& q, const Schedule& schedule) {
    require(d.t0() == schedule.t0() && q.t0() == schedule.t0(), ErrorCode::InvalidInput,
            fmt::format("curves anchored at {} and {} but the schedule starts at {}", d.t0(),
                        q.t0(), schedule.t0()));
    const std::size_t n = schedule.size();
    discount.resize(n + 1);
    survival.resize(n + 1);
    accrual.assign(n + 1, 0.0);
    floating.assign(n + 1, 0.0);
    discount[0] = 1.0;
    survival[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        discount[k] = d.discount(schedule.date(k));
        survival[k] = q.survival(schedule.date(k));
        accrual[k] = schedule.accrual(k);
        floating[k] = forward_rate(d, schedule.date(k - 1), schedule.date(k));
    }
}

Real price_riskfree_bond(const DiscountCurve& d, const Schedule& schedule, Rate coupon) {
    Real coupons = 0.0;
    for (std::size_t k = 1; k <= schedule.size(); ++k)
        coupons += schedule.accrual(k) * d.discount(schedule.date(k));
    return coupon * coupons + d.discount(schedule.maturity());
}

Real price_risky_bond(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond) {
    return risky_bond_value(PricingGrid(d, q, bond.schedule()), bond.coupon(), bond.recovery());
}

Real price_risky_floater(const DiscountCurve& d, const SurvivalCurve& q, const Schedule& schedule,
                         Real recovery) {
    check_recovery(recovery);
    return floater_value(PricingGrid(d, q, schedule), recovery);
}

Real annuity_riskfree(const DiscountCurve& d, const Schedule& schedule) {
    Real a = 0.0;
    for (std::size_t k = 1; k <= schedule.size(); ++k)
        a += schedule.accrual(k) * d.discount(schedule.date(k));
    return a;
}

Real annuity_defaultable(const DiscountCurve& d, const SurvivalCurve& q, const Schedule& schedule) {
    return defaultable_annuity(PricingGrid(d, q, schedule));
}

SpreadResult par_cds_spread(const DiscountCurve& d, const SurvivalCurve& q,
                            const Schedule& schedule, Real recovery) {
    check_recovery(recovery);
    const PricingGrid g(d, q, schedule);
    return make_spread((1.0 - recovery) * default_leg(g), defaultable_annuity(g));
}

SpreadResult par_asw_spread(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond) {
    const Real riskfree = price_riskfree_bond(d, bond.schedule(), bond.coupon());
    const Real risky = price_risky_bond(d, q, bond);
    return make_spread(riskfree - risky, annuity_riskfree(d, bond.schedule()));
}

SpreadResult par_cancelable_asw_spread(const DiscountCurve& d, const SurvivalCurve& q,
                                       const BondSpec& bond) {
    return cancelable_spread(PricingGrid(d, q, bond.schedule()), bond.recovery(), 1.0);
}

Real standard_asw_pv(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                     Spread spread) {
    const PricingGrid g(d, q, bond.schedule());
    const auto flows = swap_period_flows(g, bond.coupon(), spread);
    Real pv = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        pv += flows[k - 1] * g.discount[k];
    return pv + risky_bond_value(g, bond.coupon(), bond.recovery()) - 1.0;
}

Real cancelable_asw_pv(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                       Spread spread) {
    const PricingGrid g(d, q, bond.schedule());
    const auto flows = swap_period_flows(g, bond.coupon(), spread);
    Real pv = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        pv += flows[k - 1] * g.discount[k] * g.survival[k];
    return pv + risky_bond_value(g, bond.coupon(), bond.recovery()) - 1.0;
}

MtmProfile mtm_profile(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                       Spread spread) {
    const PricingGrid g(d, q, bond.schedule());
    const auto flows = swap_period_flows(g, bond.coupon(), spread);
    const std::size_t n = g.periods();
    MtmProfile profile;
    profile.values.resize(n);
    // Backward accumulation of sum_{h>=k} flow_h P(t0, t_h), rebased to t_k.
    Real tail = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        tail += flows[k - 1] * g.discount[k];
        profile.values[k - 1] = tail / g.discount[k];
    }
    return profile;
}

Real early_termination_pv(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                          Spread spread) {
    const PricingGrid g(d, q, bond.schedule());
    const auto mtm = mtm_profile(d, q, bond, spread);
    Real pv = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        pv -= g.default_prob(k) * g.discount[k] * mtm.values[k - 1];
    return pv;
}

Real early_termination_pv_collapsed(const DiscountCurve& d, const SurvivalCurve& q,
                                    const BondSpec& bond, Spread spread) {
    const PricingGrid g(d, q, bond.schedule());
    const auto flows = swap_period_flows(g, bond.coupon(), spread);
    Real pv = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        pv -= flows[k - 1] * g.discount[k] * (1.0 - g.survival[k]);
    return pv;
}

Spread cancelable_spread_via_termination(const DiscountCurve& d, const SurvivalCurve& q,
                                         const BondSpec& bond) {
    auto total_pv = [&](double s) {
        return standard_asw_pv(d, q, bond, s) + early_termination_pv(d, q, bond, s);
    };
    const auto root = detail::bracketed_root(total_pv, -10.0, 10.0);
    require(root.has_value(), ErrorCode::QuoteUnattainable,
            "no spread in [-10, 10] prices the cancelable asset swap to zero");
    return *root;
}

Real forward_bond_price(const DiscountCurve& d, const SurvivalCurve& q, const BondSpec& bond,
                        Time repo_maturity) {
    const std::size_t m = grid_index(bond.schedule(), repo_maturity);
    const PricingGrid g(d, q, bond.schedule());
    const std::size_t n = g.periods();
    if (m == n)
        return 1.0;
    Real value = g.discount[n] * g.survival[n];
    for (std::size_t k = m + 1; k <= n; ++k) {
        value += bond.coupon() * g.accrual[k] * g.discount[k] * g.survival[k];
        value += bond.recovery() * g.discount[k] * g.default_prob(k);
    }
    return value / (g.discount[m] * g.survival[m]);
}

SpreadResult par_cancelable_asw_spread_generalized(const DiscountCurve& d, const SurvivalCurve& q,
                                                   const BondSpec& bond, Time repo_maturity,
                                                   Real forward_price) {
    grid_index(bond.schedule(), repo_maturity);
    require(forward_price > 0.0 && std::isfinite(forward_price), ErrorCode::InvalidInput,
            fmt::format("forward price {} must be positive", forward_price));
    const Schedule truncated = truncate_schedule(bond.schedule(), repo_maturity);
    return cancelable_spread(PricingGrid(d, q, truncated), bond.recovery(), forward_price);
}

SpreadResult par_asw_spread_generalized(const DiscountCurve& d, const SurvivalCurve& q,
                                        const BondSpec& bond, Time repo_maturity,
                                        Real forward_price) {
    const std::size_t m = grid_index(bond.schedule(), repo_maturity);
    require(forward_price > 0.0 && std::isfinite(forward_price), ErrorCode::InvalidInput,
            fmt::format("forward price {} must be positive", forward_price));
    if (m == bond.schedule().size() && forward_price == 1.0)
        return par_asw_spread(d, q, bond);
    const PricingGrid g(d, q, bond.schedule());
    Real annuity = 0.0;
    Real floating = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        annuity += g.accrual[k] * g.discount[k];
        floating += g.floating[k] * g.accrual[k] * g.discount[k];
    }
    const Real upfront = risky_bond_value(g, bond.coupon(), bond.recovery()) - forward_price;
    return make_spread(bond.coupon() * annuity - floating - upfront, annuity);
}

SpreadResult fair_repo_spread(const DiscountCurve& d, const SurvivalCurve& q,
                              const Schedule& schedule) {
    const PricingGrid g(d, q, schedule);
    // Floating interest forfeited when the repo unwinds at t_k^-.
    Real forfeited = 0.0;
    for (std::size_t k = 1; k <= g.periods(); ++k)
        forfeited += (g.discount[k - 1] - g.discount[k]) * g.default_prob(k);
    return make_spread(-forfeited, defaultable_annuity(g));
}

ImpliedRepoSpreads implied_repo_spreads(Spread cds_bid, Spread cds_ask, Spread aswc_bid,
                                        Spread aswc_ask) {
    require(cds_bid <= cds_ask, ErrorCode::CrossedMarket,
            fmt::format("CDS bid {} above ask {}", cds_bid, cds_ask));
    require(aswc_bid <= aswc_ask, ErrorCode::CrossedMarket,
            fmt::format("asset swap bid {} above ask {}", aswc_bid, aswc_ask));
    return {cds_ask - aswc_bid, cds_bid - aswc_ask};
}

} // namespace replica
