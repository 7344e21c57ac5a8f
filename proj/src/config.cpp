#include "replica/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace replica {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message,
                         std::optional<std::size_t> line)
    : Error(ErrorCode::InvalidInput,
            line ? fmt::format("config line {}: {}", *line, message)
                 : fmt::format("config field '{}': {}", field, message)),
      field_(std::move(field)), line_(line) {}

namespace {

std::string join(std::string_view parent, std::string_view key) {
    return parent.empty() ? std::string(key) : fmt::format("{}.{}", parent, key);
}

void expect_object(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object())
        throw ConfigError(path.empty() ? "<root>" : path, "expected a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw ConfigError(join(path, key), "unknown field");
}

double number(const json& obj, const std::string& path, const char* key) {
    const std::string field = join(path, key);
    if (!obj.contains(key))
        throw ConfigError(field, "missing required field");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw ConfigError(field, "must be finite");
    return x;
}

std::optional<double> optional_number(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key))
        return std::nullopt;
    return number(obj, path, key);
}

std::vector<CurveNode> parse_nodes(const json& root, const char* key, const char* value_key) {
    const std::string path = key;
    const json& arr = root.at(key);
    if (!arr.is_array() || arr.empty())
        throw ConfigError(path, "expected a non-empty array of nodes");
    std::vector<CurveNode> nodes;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string item = fmt::format("{}[{}]", path, i);
        expect_object(arr[i], item, {"time", value_key});
        nodes.push_back({number(arr[i], item, "time"), number(arr[i], item, value_key)});
    }
    return nodes;
}

std::pair<std::vector<Time>, std::vector<Rate>> split(const std::vector<CurveNode>& nodes) {
    std::vector<Time> times;
    std::vector<Rate> values;
    for (const auto& n : nodes) {
        times.push_back(n.time);
        values.push_back(n.value);
    }
    return {times, values};
}

template <class F>
void check(const std::string& field, F&& build) {
    try {
        build();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(field, e.what());
    }
}

SurvivalCurve make_survival_curve(const MarketConfig& config) {
    auto [times, hazards] = split(*config.hazard_nodes);
    return SurvivalCurve(config.t0, std::move(times), std::move(hazards));
}

void validate(const MarketConfig& c) {
    check("discount_nodes", [&] { make_discount_curve(c); });
    if (c.hazard_nodes)
        check("hazard_nodes", [&] { make_survival_curve(c); });
    if (c.cds_quote && *c.cds_quote < 0.0)
        throw ConfigError("cds_quote", "must be non-negative");
    if (c.cds_quote && c.bond.recovery >= 1.0)
        throw ConfigError("bond.recovery", "calibration needs recovery below 1");
    if (c.bond.recovery < 0.0 || c.bond.recovery > 1.0)
        throw ConfigError("bond.recovery", "must lie in [0, 1]");
    if (c.bond.maturity <= c.t0)
        throw ConfigError("bond.maturity", "must be after t0");
    check("bond", [&] { make_schedule(c); });
    if (c.repo) {
        const Schedule schedule = make_schedule(c);
        if (schedule.index_of(c.repo->maturity) == 0)
            throw ConfigError("repo.maturity", "must be a bond payment date");
        if (c.repo->forward_price) {
            if (*c.repo->forward_price <= 0.0)
                throw ConfigError("repo.forward_price", "must be positive");
            if (schedule.index_of(c.repo->maturity) == schedule.size() &&
                std::abs(*c.repo->forward_price - 1.0) > 1e-12)
                throw ConfigError("repo.forward_price",
                                  "a repo to the bond maturity returns par (use 1 or \"fair\")");
        }
    }
}

} // namespace

MarketConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(
                                  std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw ConfigError("<root>", e.what(), line);
    }
    expect_object(root, "",
                  {"t0", "discount_nodes", "hazard_nodes", "cds_quote", "bond", "repo", "quotes"});

    MarketConfig config;
    config.t0 = optional_number(root, "", "t0").value_or(0.0);
    if (!root.contains("discount_nodes"))
        throw ConfigError("discount_nodes", "missing required field");
    config.discount_nodes = parse_nodes(root, "discount_nodes", "rate");

    const bool has_hazards = root.contains("hazard_nodes");
    const bool has_quote = root.contains("cds_quote");
    if (has_hazards == has_quote)
        throw ConfigError(has_hazards ? "cds_quote" : "hazard_nodes",
                          "exactly one of hazard_nodes and cds_quote must be given");
    if (has_hazards)
        config.hazard_nodes = parse_nodes(root, "hazard_nodes", "hazard");
    else
        config.cds_quote = number(root, "", "cds_quote");

    if (!root.contains("bond"))
        throw ConfigError("bond", "missing required field");
    const json& bond = root.at("bond");
    expect_object(bond, "bond", {"coupon", "recovery", "maturity", "frequency"});
    config.bond.coupon = number(bond, "bond", "coupon");
    config.bond.recovery = number(bond, "bond", "recovery");
    config.bond.maturity = number(bond, "bond", "maturity");
    if (!bond.contains("frequency") || !bond.at("frequency").is_number_integer())
        throw ConfigError("bond.frequency", "expected an integer");
    config.bond.frequency = bond.at("frequency").get<int>();

    if (root.contains("repo")) {
        const json& repo = root.at("repo");
        expect_object(repo, "repo", {"spread", "maturity", "forward_price"});
        RepoConfig r;
        r.spread = optional_number(repo, "repo", "spread").value_or(0.0);
        r.maturity = optional_number(repo, "repo", "maturity").value_or(config.bond.maturity);
        if (repo.contains("forward_price")) {
            const json& x = repo.at("forward_price");
            if (x.is_string()) {
                if (x.get<std::string>() != "fair")
                    throw ConfigError("repo.forward_price", "expected a number or \"fair\"");
            } else {
                r.forward_price = number(repo, "repo", "forward_price");
            }
        }
        config.repo = r;
    }

    if (root.contains("quotes")) {
        const json& q = root.at("quotes");
        expect_object(q, "quotes", {"cds_bid", "cds_ask", "aswc_bid", "aswc_ask"});
        config.quotes = QuotesConfig{number(q, "quotes", "cds_bid"), number(q, "quotes", "cds_ask"),
                                     number(q, "quotes", "aswc_bid"),
                                     number(q, "quotes", "aswc_ask")};
    }

    validate(config);
    return config;
}

MarketConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", fmt::format("cannot read {}", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

json config_to_json(const MarketConfig& c) {
    auto nodes = [](const std::vector<CurveNode>& list, const char* value_key) {
        json arr = json::array();
        for (const auto& n : list)
            arr.push_back({{"time", n.time}, {value_key, n.value}});
        return arr;
    };
    json j;
    j["t0"] = c.t0;
    j["discount_nodes"] = nodes(c.discount_nodes, "rate");
    if (c.hazard_nodes)
        j["hazard_nodes"] = nodes(*c.hazard_nodes, "hazard");
    if (c.cds_quote)
        j["cds_quote"] = *c.cds_quote;
    j["bond"] = {{"coupon", c.bond.coupon},
                 {"recovery", c.bond.recovery},
                 {"maturity", c.bond.maturity},
                 {"frequency", c.bond.frequency}};
    if (c.repo) {
        j["repo"] = {{"spread", c.repo->spread}, {"maturity", c.repo->maturity}};
        if (c.repo->forward_price)
            j["repo"]["forward_price"] = *c.repo->forward_price;
        else
            j["repo"]["forward_price"] = "fair";
    }
    if (c.quotes)
        j["quotes"] = {{"cds_bid", c.quotes->cds_bid},
                       {"cds_ask", c.quotes->cds_ask},
                       {"aswc_bid", c.quotes->aswc_bid},
                       {"aswc_ask", c.quotes->aswc_ask}};
    return j;
}

std::string serialize_config(const MarketConfig& config) { return config_to_json(config).dump(2); }

DiscountCurve make_discount_curve(const MarketConfig& config) {
    auto [times, rates] = split(config.discount_nodes);
    return DiscountCurve(config.t0, std::move(times), std::move(rates));
}

Schedule make_schedule(const MarketConfig& config) {
    return build_schedule(config.t0, config.bond.maturity, config.bond.frequency);
}

Market build_market(const MarketConfig& config) {
    const DiscountCurve discount = make_discount_curve(config);
    const Schedule schedule = make_schedule(config);
    const SurvivalCurve survival =
        config.hazard_nodes
            ? make_survival_curve(config)
            : calibrate_flat_hazard(discount, schedule, *config.cds_quote, config.bond.recovery);
    BondSpec bond(config.bond.coupon, config.bond.recovery, schedule);

    RepoSpec repo;
    repo.maturity = schedule.maturity();
    if (config.repo) {
        repo.spread = config.repo->spread;
        repo.maturity = schedule.date(schedule.index_of(config.repo->maturity));
        repo.forward_price = config.repo->forward_price
                                 ? *config.repo->forward_price
                                 : forward_bond_price(discount, survival, bond, repo.maturity);
    }
    return {discount, survival, std::move(bond), repo};
}

} // namespace replica
