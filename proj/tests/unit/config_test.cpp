#include "replica/config.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

namespace replica {
namespace {

const char* kF1 = R"({
  "discount_nodes": [{"time": 5.0, "rate": 0.02}],
  "hazard_nodes": [{"time": 5.0, "hazard": 0.02}],
  "bond": {"coupon": 0.05, "recovery": 0.4, "maturity": 5.0, "frequency": 1},
  "repo": {"spread": 0.001, "maturity": 3.0, "forward_price": "fair"},
  "quotes": {"cds_bid": 0.010, "cds_ask": 0.012, "aswc_bid": 0.009, "aswc_ask": 0.011}
})";

std::string field_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.field();
    }
    ADD_FAILURE() << "config accepted: " << text;
    return {};
}

std::string with(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return text.replace(at, from.size(), to);
}

TEST(ConfigTest, ParsesFullConfig) {
    const MarketConfig c = parse_config(kF1);
    EXPECT_EQ(c.t0, 0.0);
    ASSERT_EQ(c.discount_nodes.size(), 1u);
    EXPECT_EQ(c.discount_nodes[0], (CurveNode{5.0, 0.02}));
    ASSERT_TRUE(c.hazard_nodes.has_value());
    EXPECT_FALSE(c.cds_quote.has_value());
    EXPECT_EQ(c.bond.frequency, 1);
    ASSERT_TRUE(c.repo.has_value());
    EXPECT_FALSE(c.repo->forward_price.has_value());
    EXPECT_EQ(c.quotes->aswc_ask, 0.011);
}

TEST(ConfigTest, RoundTripsThroughJson) {
    const MarketConfig c = parse_config(kF1);
    EXPECT_EQ(parse_config(serialize_config(c)), c);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 0.1);
    for (int trial = 0; trial < 100; ++trial) {
        MarketConfig r = c;
        r.discount_nodes = {{1.0 + u(rng), u(rng)}, {3.0 + u(rng), u(rng)}};
        r.hazard_nodes.reset();
        r.cds_quote = u(rng);
        r.bond.coupon = u(rng);
        r.repo->spread = u(rng) - 0.05;
        r.repo->forward_price = 0.9 + u(rng);
        r.quotes.reset();
        EXPECT_EQ(parse_config(serialize_config(r)), r);
    }
}

TEST(ConfigTest, HazardsAndQuoteAreExclusive) {
    EXPECT_EQ(field_of(with(kF1, R"("bond":)", R"("cds_quote": 0.01, "bond":)")), "cds_quote");
    EXPECT_EQ(field_of(with(kF1, R"("hazard_nodes": [{"time": 5.0, "hazard": 0.02}],)", "")),
              "hazard_nodes");
}

TEST(ConfigTest, IdentifiesBadFields) {
    EXPECT_EQ(field_of(with(kF1, R"("coupon": 0.05)", R"("coupon": "high")")), "bond.coupon");
    EXPECT_EQ(field_of(with(kF1, R"("frequency": 1)", R"("frequency": 3)")), "bond");
    EXPECT_EQ(field_of(with(kF1, R"("frequency": 1)", R"("frequency": 1.5)")), "bond.frequency");
    EXPECT_EQ(field_of(with(kF1, R"("maturity": 3.0)", R"("maturity": 3.5)")), "repo.maturity");
    EXPECT_EQ(field_of(with(kF1, R"("forward_price": "fair")", R"("forward_price": "cheap")")),
              "repo.forward_price");
    EXPECT_EQ(field_of(with(kF1, R"("hazard": 0.02)", R"("hazard": -0.02)")), "hazard_nodes");
    EXPECT_EQ(field_of(with(kF1, R"("rate": 0.02)", R"("rte": 0.02)")), "discount_nodes[0].rte");
    EXPECT_EQ(field_of(with(kF1, R"("recovery": 0.4)", R"("recovery": 1.4)")), "bond.recovery");
    EXPECT_EQ(field_of(with(kF1, R"("cds_bid": 0.010, )", "")), "quotes.cds_bid");
}

TEST(ConfigTest, ReportsLineOfSyntaxErrors) {
    try {
        parse_config(with(kF1, R"("coupon": 0.05,)", R"("coupon": 0.05,,)"));
        FAIL() << "accepted malformed JSON";
    } catch (const ConfigError& e) {
        ASSERT_TRUE(e.line().has_value());
        EXPECT_EQ(*e.line(), 4u);
    }
}

TEST(ConfigTest, BuildsMarketWithFairForward) {
    const Market m = build_market(parse_config(kF1));
    EXPECT_EQ(m.repo.maturity, 3.0);
    EXPECT_EQ(m.repo.forward_price, forward_bond_price(m.discount, m.survival, m.bond, 3.0));
    EXPECT_EQ(m.repo.spread, 0.001);

    const Market calibrated = build_market(parse_config(
        with(kF1, R"("hazard_nodes": [{"time": 5.0, "hazard": 0.02}],)", R"("cds_quote": 0.0,)")));
    EXPECT_EQ(calibrated.survival.survival(5.0), 1.0);
}

} // namespace
} // namespace replica
