#pragma once

#include "replica/curves.hpp"
#include "replica/errors.hpp"
#include "replica/pricers.hpp"
#include "replica/types.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace replica {

struct CurveNode {
    Time time = 0.0;
    Rate value = 0.0;
    bool operator==(const CurveNode&) const = default;
};

struct BondConfig {
    Rate coupon = 0.0;
    Real recovery = 0.0;
    Time maturity = 0.0;
    int frequency = 1;
    bool operator==(const BondConfig&) const = default;
};

struct RepoConfig {
    Spread spread = 0.0;
    Time maturity = 0.0;
    std::optional<Real> forward_price; // empty means "fair"
    bool operator==(const RepoConfig&) const = default;
};

struct QuotesConfig {
    Spread cds_bid = 0.0;
    Spread cds_ask = 0.0;
    Spread aswc_bid = 0.0;
    Spread aswc_ask = 0.0;
    bool operator==(const QuotesConfig&) const = default;
};

/// Market and trade description read from the JSON config file. Exactly one
/// of hazard_nodes and cds_quote is set.
struct MarketConfig {
    Time t0 = 0.0;
    std::vector<CurveNode> discount_nodes;
    std::optional<std::vector<CurveNode>> hazard_nodes;
    std::optional<Spread> cds_quote;
    BondConfig bond;
    std::optional<RepoConfig> repo;
    std::optional<QuotesConfig> quotes;
    bool operator==(const MarketConfig&) const = default;
};

/// Validation failure; field is a dotted path such as "bond.coupon", line is
/// set for JSON syntax errors.
class ConfigError : public Error {
  public:
    ConfigError(std::string field, const std::string& message, std::optional<std::size_t> line = {});
    const std::string& field() const noexcept { return field_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

  private:
    std::string field_;
    std::optional<std::size_t> line_;
};

MarketConfig parse_config(std::string_view text);
MarketConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const MarketConfig& config);
std::string serialize_config(const MarketConfig& config);

/// Library objects built from a config. The survival curve is calibrated
/// from cds_quote when no hazard nodes are given; "fair" forward prices are
/// resolved with forward_bond_price.
struct Market {
    DiscountCurve discount;
    SurvivalCurve survival;
    BondSpec bond;
    RepoSpec repo;
};

DiscountCurve make_discount_curve(const MarketConfig& config);
Schedule make_schedule(const MarketConfig& config);
Market build_market(const MarketConfig& config);

} // namespace replica
