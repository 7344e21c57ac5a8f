#include "replica/curves.hpp"
#include "replica/errors.hpp"
#include "replica/pricers.hpp"

#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

namespace replica {
namespace {

ErrorCode error_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidInput;
}

TEST(DiscountCurveTest, ClosedForms) {
    EXPECT_EQ(DiscountCurve::flat(0.0).discount(7.3), 1.0);
    EXPECT_NEAR(DiscountCurve::flat(0.02).discount(5.0), 0.9048374180359595, 1e-15);
    const DiscountCurve two(0.0, {1.0, 2.0}, {0.01, 0.03});
    EXPECT_NEAR(two.discount(2.0), std::exp(-0.04), 1e-15);
    EXPECT_NEAR(two.discount(3.5), std::exp(-0.04 - 0.045), 1e-15);
    EXPECT_EQ(two.discount(0.0), 1.0);
    EXPECT_EQ(discount_factor(two, 0.0), 1.0);
}

TEST(DiscountCurveTest, RejectsTimesBeforeAnchor) {
    const auto d = DiscountCurve::flat(0.02);
    EXPECT_EQ(error_of([&] { d.discount(-0.1); }), ErrorCode::TimeBeforeAnchor);
}

TEST(DiscountCurveTest, RejectsBadNodes) {
    EXPECT_EQ(error_of([] { DiscountCurve(0.0, {2.0, 1.0}, {0.01, 0.02}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([] { DiscountCurve(0.0, {0.0}, {0.01}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([] { DiscountCurve(0.0, {1.0}, {NAN}); }), ErrorCode::InvalidInput);
}

TEST(SurvivalCurveTest, ClosedForms) {
    const auto none = SurvivalCurve::flat(0.0);
    EXPECT_EQ(none.survival(12.0), 1.0);
    const auto flat = SurvivalCurve::flat(0.02);
    EXPECT_NEAR(flat.survival(5.0), std::exp(-0.1), 1e-15);
    EXPECT_EQ(survival_prob(flat, 0.0), 1.0);
    EXPECT_EQ(error_of([] { SurvivalCurve(0.0, {1.0}, {-0.01}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([&] { flat.survival(-1.0); }), ErrorCode::TimeBeforeAnchor);
}

TEST(ForwardRateTest, ClosedForms) {
    EXPECT_EQ(forward_rate(DiscountCurve::flat(0.0), 0.3, 1.7), 0.0);
    EXPECT_NEAR(forward_rate(DiscountCurve::flat(0.02), 0.0, 1.0), std::expm1(0.02), 1e-15);
    EXPECT_NEAR(forward_rate(DiscountCurve::flat(0.02), 0.0, 1.0), 0.0202013, 1e-7);
    EXPECT_EQ(error_of([] { forward_rate(DiscountCurve::flat(0.02), 1.0, 1.0); }),
              ErrorCode::InvalidInterval);
    EXPECT_EQ(error_of([] { forward_rate(DiscountCurve::flat(0.02), -1.0, 1.0); }),
              ErrorCode::InvalidInterval);
}

TEST(DefaultDistributionTest, NoDefaultRisk) {
    const auto law = default_distribution(SurvivalCurve::flat(0.0), build_schedule(0, 5, 1));
    for (double p : law.bucket_probs)
        EXPECT_EQ(p, 0.0);
    EXPECT_EQ(law.survival_prob, 1.0);
}

TEST(DefaultDistributionTest, FlatHazardBuckets) {
    const auto law = default_distribution(SurvivalCurve::flat(0.02), build_schedule(0, 5, 1));
    ASSERT_EQ(law.bucket_probs.size(), 5u);
    for (int k = 1; k <= 5; ++k)
        EXPECT_NEAR(law.bucket_probs[k - 1], std::exp(-0.02 * (k - 1)) - std::exp(-0.02 * k), 1e-15);
    EXPECT_NEAR(law.survival_prob, std::exp(-0.1), 1e-15);
}

TEST(CurvePropertyTest, MultiplicativityAndDistribution) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = testing::random_fixture(rng);
        const auto d = f.discount_curve();
        const auto q = f.survival_curve();
        const testing::Oracle oracle(f);
        std::uniform_real_distribution<double> u(0.0, 1.5 * f.maturity());
        double t1 = u(rng), t2 = u(rng);
        if (t1 > t2)
            std::swap(t1, t2);
        EXPECT_NEAR(d.discount(t2), d.discount(t1) * std::exp(-d.short_rates().integral(t1, t2)), 1e-14);
        EXPECT_NEAR(q.survival(t2), q.survival(t1) * std::exp(-q.hazards().integral(t1, t2)), 1e-14);
        EXPECT_NEAR(d.discount(t2), oracle.P(t2), 1e-14);
        EXPECT_NEAR(q.survival(t2), oracle.Q(t2), 1e-14);
        if (std::all_of(f.rates.begin(), f.rates.end(), [](double r) { return r >= 0; }))
            EXPECT_LE(d.discount(t2), d.discount(t1));
        EXPECT_LE(q.survival(t2), q.survival(t1));

        const Schedule s = f.schedule();
        const auto law = default_distribution(q, s);
        double total = law.survival_prob;
        for (double p : law.bucket_probs) {
            EXPECT_GE(p, 0.0);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);

        for (std::size_t k = 1; k <= s.size(); ++k) {
            const double eps = forward_rate(d, s.date(k - 1), s.date(k));
            EXPECT_NEAR((1.0 + eps * s.accrual(k)) * d.discount(s.date(k)), d.discount(s.date(k - 1)),
                        1e-15);
        }
    }
}

TEST(CalibrationTest, ZeroQuoteGivesZeroHazard) {
    const auto s = build_schedule(0, 5, 1);
    const auto q = calibrate_flat_hazard(DiscountCurve::flat(0.02), s, 0.0, 0.4);
    EXPECT_EQ(q.hazards().values().front(), 0.0);
}

TEST(CalibrationTest, RoundTripOnFixtureGrid) {
    const auto d = DiscountCurve::flat(0.02);
    const auto s = build_schedule(0, 5, 1);
    const double quote = par_cds_spread(d, SurvivalCurve::flat(0.02), s, 0.4).spread;
    const auto q = calibrate_flat_hazard(d, s, quote, 0.4);
    EXPECT_NEAR(q.hazards().values().front(), 0.02, 1e-10);
    EXPECT_NEAR(par_cds_spread(d, q, s, 0.4).spread, quote, 1e-12);
}

TEST(CalibrationTest, RoundTripProperty) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> log_hazard(std::log(1e-6), 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing::random_fixture(rng);
        if (f.recovery >= 1.0)
            continue;
        const double hazard = std::exp(log_hazard(rng));
        const auto d = f.discount_curve();
        const auto s = f.schedule();
        const double quote = par_cds_spread(d, SurvivalCurve::flat(hazard), s, f.recovery).spread;
        const auto q = calibrate_flat_hazard(d, s, quote, f.recovery);
        EXPECT_NEAR(q.hazards().values().front(), hazard, 1e-10) << "trial " << trial;
    }
}

TEST(CalibrationTest, QuoteAboveCeilingIsUnattainable) {
    const auto d = DiscountCurve::flat(0.02);
    const auto s = build_schedule(0, 5, 1);
    // Bracket ceiling: the most a flat hazard of 10 can produce on this grid.
    const double ceiling = par_cds_spread(d, SurvivalCurve::flat(kMaxCalibrationHazard), s, 0.4).spread;
    EXPECT_NEAR(ceiling, 0.6 * std::expm1(10.0), 1e-12 * ceiling);
    EXPECT_EQ(error_of([&] { calibrate_flat_hazard(d, s, 1.01 * ceiling, 0.4); }),
              ErrorCode::QuoteUnattainable);
    EXPECT_EQ(error_of([&] { calibrate_flat_hazard(d, s, -0.01, 0.4); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([&] { calibrate_flat_hazard(d, s, 0.01, 1.0); }), ErrorCode::InvalidInput);
}

} // namespace
} // namespace replica
