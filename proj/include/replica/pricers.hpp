#pragma once

#include "replica/curves.hpp"
#include "replica/schedule.hpp"
#include "replica/types.hpp"

#include <vector>

namespace replica {

/// Fixed-coupon bond on unit notional. Recovery lies in [0, 1]; the R = 1
/// limit is admitted for the pricers, calibration requires R < 1.
class BondSpec {
  public:
    BondSpec(Rate coupon, Real recovery, Schedule schedule);

    Rate coupon() const noexcept { return coupon_; }
    Real recovery() const noexcept { return recovery_; }
    Real lgd() const noexcept { return 1.0 - recovery_; }
    const Schedule& schedule() const noexcept { return schedule_; }

  private:
    Rate coupon_;
    Real recovery_;
    Schedule schedule_;
};

/// Repo on unit notional: cash X at inception, floating minus spread while the
/// issuer survives, X returned at the repo maturity.
struct RepoSpec {
    Spread spread = 0.0;
    Time maturity = 0.0;
    Real forward_price = 1.0;
};

struct SpreadResult {
    Spread spread = 0.0;
    Real numerator = 0.0;
    Real annuity = 0.0;
};

/// mtm_{t_k^-} for k = 1..N (stored at [k-1]): value at t_k of the swap
/// payments still due from t_k on, seen by the bond holder.
struct MtmProfile {
    std::vector<Real> values;
};

struct ImpliedRepoSpreads {
    Spread repo = 0.0;
    Spread reverse_repo = 0.0;
};

/// Discount factors, survival probabilities, accruals and floating fixings on
/// the schedule nodes. Index 0 is the anchor; periods are 1..N.
struct PricingGrid {
    PricingGrid(const DiscountCurve& discount, const SurvivalCurve& survival,
                const Schedule& schedule);

    std::size_t periods() const noexcept { return discount.size() - 1; }
    /// Q(t_{k-1}) - Q(t_k)
    Real default_prob(std::size_t k) const { return survival[k - 1] - survival[k]; }

    std::vector<Real> discount;
    std::vector<Real> survival;
    std::vector<Time> accrual;  // [0] unused
    std::vector<Rate> floating; // [k] = epsilon_{k-1}, the fixing paid at t_k
};

Real price_riskfree_bond(const DiscountCurve& discount, const Schedule& schedule, Rate coupon);
Real price_risky_bond(const DiscountCurve& discount, const SurvivalCurve& survival,
                      const BondSpec& bond);
Real price_risky_floater(const DiscountCurve& discount, const SurvivalCurve& survival,
                         const Schedule& schedule, Real recovery);

Real annuity_riskfree(const DiscountCurve& discount, const Schedule& schedule);
Real annuity_defaultable(const DiscountCurve& discount, const SurvivalCurve& survival,
                         const Schedule& schedule);

/// Stylized CDS: premium s * sum theta P Q against protection LGD * sum P dQ.
SpreadResult par_cds_spread(const DiscountCurve& discount, const SurvivalCurve& survival,
                            const Schedule& schedule, Real recovery);

/// (B_rf - B) / A_rf
SpreadResult par_asw_spread(const DiscountCurve& discount, const SurvivalCurve& survival,
                            const BondSpec& bond);
/// (1 - F) / A, the asset swap that terminates with zero close-out on default.
SpreadResult par_cancelable_asw_spread(const DiscountCurve& discount, const SurvivalCurve& survival,
                                       const BondSpec& bond);

/// Bond-holder PV of the standard asset swap at the given spread, upfront
/// B - 1 included; the swap runs to maturity regardless of default.
Real standard_asw_pv(const DiscountCurve& discount, const SurvivalCurve& survival,
                     const BondSpec& bond, Spread spread);
/// Bond-holder PV of the cancelable asset swap, upfront B - 1 included.
Real cancelable_asw_pv(const DiscountCurve& discount, const SurvivalCurve& survival,
                       const BondSpec& bond, Spread spread);

MtmProfile mtm_profile(const DiscountCurve& discount, const SurvivalCurve& survival,
                       const BondSpec& bond, Spread spread);

/// Value of the break clause to the bond holder:
/// -sum_k P(Q_{k-1} - Q_k) P(t_k) mtm_{t_k^-}.
Real early_termination_pv(const DiscountCurve& discount, const SurvivalCurve& survival,
                          const BondSpec& bond, Spread spread);
/// Same quantity after exchanging the order of summation:
/// -sum_k (-c + eps_{k-1} + s) theta_k P_k (1 - Q_k).
Real early_termination_pv_collapsed(const DiscountCurve& discount, const SurvivalCurve& survival,
                                    const BondSpec& bond, Spread spread);

/// Spread that zeroes standard_asw_pv + early_termination_pv, found by root
/// search rather than by the closed form.
Spread cancelable_spread_via_termination(const DiscountCurve& discount,
                                         const SurvivalCurve& survival, const BondSpec& bond);

/// Bond value at repo_maturity conditional on survival to it. Exactly 1 at
/// the bond maturity (redemption).
Real forward_bond_price(const DiscountCurve& discount, const SurvivalCurve& survival,
                        const BondSpec& bond, Time repo_maturity);

/// (X - F(T_r)) / A(T_r) on the schedule truncated at T_r.
SpreadResult par_cancelable_asw_spread_generalized(const DiscountCurve& discount,
                                                   const SurvivalCurve& survival,
                                                   const BondSpec& bond, Time repo_maturity,
                                                   Real forward_price);

/// Standard (no break clause) asset swap to T_r with upfront B - X, priced to
/// zero PV. Reduces to par_asw_spread at T_r = t_N, X = 1.
SpreadResult par_asw_spread_generalized(const DiscountCurve& discount,
                                        const SurvivalCurve& survival, const BondSpec& bond,
                                        Time repo_maturity, Real forward_price);

/// Repo-to-maturity spread at which the bond holder's repo has zero value when
/// a default unwinds the repo at par on t_k with no period-k interest.
SpreadResult fair_repo_spread(const DiscountCurve& discount, const SurvivalCurve& survival,
                              const Schedule& schedule);

/// repo = cds_ask - aswc_bid; reverse = cds_bid - aswc_ask. CrossedMarket if a
/// bid exceeds its ask.
ImpliedRepoSpreads implied_repo_spreads(Spread cds_bid, Spread cds_ask, Spread aswc_bid,
                                        Spread aswc_ask);

} // namespace replica
