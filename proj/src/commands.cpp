#include "replica/commands.hpp"

#include "replica/pricers.hpp"
#include "replica/replication.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <string_view>

namespace replica {

using nlohmann::json;

namespace {

json spread_decomposition(const SpreadResult& r) {
    return {{"numerator", r.numerator}, {"annuity", r.annuity}};
}

} // namespace

int exit_code_for(const Error& error) noexcept {
    return error.code() == ErrorCode::QuoteUnattainable ? exit_code::numerical
                                                         : exit_code::validation;
}

CommandResult cmd_price(const MarketConfig& config) {
    const Market m = build_market(config);
    const auto& [d, q, bond, repo] = m;
    const Schedule& schedule = bond.schedule();

    const SpreadResult cds = par_cds_spread(d, q, schedule, bond.recovery());
    const SpreadResult asw = par_asw_spread(d, q, bond);
    const SpreadResult aswc = par_cancelable_asw_spread(d, q, bond);
    const SpreadResult generalized =
        par_cancelable_asw_spread_generalized(d, q, bond, repo.maturity, repo.forward_price);

    json results;
    results["risky_bond_price"] = price_risky_bond(d, q, bond);
    results["riskfree_bond_price"] = price_riskfree_bond(d, schedule, bond.coupon());
    results["risky_floater_price"] = price_risky_floater(d, q, schedule, bond.recovery());
    results["defaultable_annuity"] = annuity_defaultable(d, q, schedule);
    results["riskfree_annuity"] = annuity_riskfree(d, schedule);
    results["cds_spread"] = cds.spread;
    results["asw_spread"] = asw.spread;
    results["cancelable_asw_spread"] = aswc.spread;
    results["early_termination_pv"] = early_termination_pv(d, q, bond, asw.spread);
    results["fair_repo_spread"] = fair_repo_spread(d, q, schedule).spread;
    results["repo_maturity"] = repo.maturity;
    results["forward_price"] = repo.forward_price;
    results["generalized_cancelable_asw_spread"] = generalized.spread;

    json report;
    report["command"] = "price";
    report["results"] = results;
    report["decomposition"] = {{"cds", spread_decomposition(cds)},
                               {"asw", spread_decomposition(asw)},
                               {"cancelable_asw", spread_decomposition(aswc)},
                               {"generalized_cancelable_asw", spread_decomposition(generalized)}};
    return {report, exit_code::ok};
}

CommandResult cmd_replicate(const MarketConfig& config, const ReplicateOptions& options) {
    const Market m = build_market(config);
    const auto& [d, q, bond, repo] = m;
    const ReplicationReport r = replication_report(d, q, bond, repo, options.clause_enabled);
    const BondSpec window(bond.coupon(), bond.recovery(),
                          truncate_schedule(bond.schedule(), r.repo_maturity));

    json scenarios = json::array();
    for (const auto& row : r.scenarios)
        scenarios.push_back({{"kind", row.scenario.survives() ? "survival" : "default"},
                             {"bucket", row.scenario.default_bucket},
                             {"time", row.event_time},
                             {"probability", row.scenario.probability},
                             {"residual", row.residual},
                             {"discounted_mtm", row.discounted_mtm}});

    json report;
    report["command"] = "replicate";
    report["clause_enabled"] = r.clause_enabled;
    report["repo_maturity"] = r.repo_maturity;
    report["forward_price"] = r.forward_price;
    report["asw_spread"] = r.asw_spread;
    report["repo_spread"] = r.repo_spread;
    report["cds_spread"] = r.cds_spread;
    report["early_termination_pv"] = early_termination_pv(d, q, window, r.asw_spread);
    report["expected_residual"] = r.expected_residual;
    report["max_abs_residual"] = r.max_abs_residual;
    report["tolerance"] = kReplicationTolerance;
    const bool holds = r.max_abs_residual < kReplicationTolerance;
    report["replication_holds"] = holds;
    report["scenarios"] = scenarios;

    if (options.mc_paths) {
        const MonteCarloEstimate mc =
            mc_check(d, q, bond, repo, options.clause_enabled, *options.mc_paths, options.seed);
        report["monte_carlo"] = {{"paths", mc.paths},
                                 {"seed", mc.seed},
                                 {"estimate", mc.estimate},
                                 {"std_error", mc.std_error}};
    }

    const int code = options.clause_enabled && !holds ? exit_code::replication : exit_code::ok;
    return {report, code};
}

CommandResult cmd_implied_repo(const MarketConfig& config) {
    if (!config.quotes)
        throw ConfigError("quotes", "implied-repo needs cds and asset swap quotes");
    const QuotesConfig& quotes = *config.quotes;
    const ImpliedRepoSpreads implied =
        implied_repo_spreads(quotes.cds_bid, quotes.cds_ask, quotes.aswc_bid, quotes.aswc_ask);
    json report;
    report["command"] = "implied_repo";
    report["quotes"] = {{"cds_bid_spread", quotes.cds_bid},
                        {"cds_ask_spread", quotes.cds_ask},
                        {"aswc_bid_spread", quotes.aswc_bid},
                        {"aswc_ask_spread", quotes.aswc_ask}};
    report["implied_repo_spread"] = implied.repo;
    report["implied_reverse_repo_spread"] = implied.reverse_repo;
    return {report, exit_code::ok};
}

CommandResult cmd_calibrate(const MarketConfig& config) {
    if (!config.cds_quote)
        throw ConfigError("cds_quote", "calibrate needs a cds_quote");
    const DiscountCurve d = make_discount_curve(config);
    const Schedule schedule = make_schedule(config);
    const SurvivalCurve q =
        calibrate_flat_hazard(d, schedule, *config.cds_quote, config.bond.recovery);
    const Spread reproduced = par_cds_spread(d, q, schedule, config.bond.recovery).spread;
    json report;
    report["command"] = "calibrate";
    report["quoted_cds_spread"] = *config.cds_quote;
    report["recovery"] = config.bond.recovery;
    report["hazard_rate"] = q.hazards().values().front();
    report["reproduced_cds_spread"] = reproduced;
    report["calibration_residual"] = reproduced - *config.cds_quote;
    return {report, exit_code::ok};
}

namespace {

double round_significant(double x) {
    if (!std::isfinite(x) || x == 0.0)
        return x;
    return std::stod(fmt::format("{:.12g}", x));
}

bool is_spread_field(std::string_view key) {
    constexpr std::string_view suffix = "_spread";
    return key.size() >= suffix.size() && key.substr(key.size() - suffix.size()) == suffix;
}

json display_values(const json& j, bool basis_points, bool spread) {
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [key, value] : j.items())
            out[key] = display_values(value, basis_points, is_spread_field(key));
        return out;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& value : j)
            out.push_back(display_values(value, basis_points, false));
        return out;
    }
    if (j.is_number_float()) {
        const double x = j.get<double>();
        return round_significant(spread && basis_points ? x * 1e4 : x);
    }
    return j;
}

std::string scalar_text(const json& v) {
    if (v.is_number_float())
        return fmt::format("{:.12g}", v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void pretty_print(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::size_t width = 0;
    for (const auto& [key, value] : j.items())
        if (!value.is_structured())
            width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out += fmt::format("{}{}:\n", pad, key);
            pretty_print(value, out, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out += fmt::format("{}{}:\n", pad, key);
            std::vector<std::string> columns;
            for (const auto& [column, unused] : value.front().items())
                columns.push_back(column);
            std::string header = pad + "  ";
            for (const auto& column : columns)
                header += fmt::format("{:>20}", column);
            out += header + "\n";
            for (const auto& row : value) {
                std::string line = pad + "  ";
                for (const auto& column : columns)
                    line += fmt::format("{:>20}", row.contains(column) ? scalar_text(row.at(column)) : "");
                out += line + "\n";
            }
        } else {
            out += fmt::format("{}{:<{}}  {}\n", pad, key, width, scalar_text(value));
        }
    }
}

} // namespace

std::string render_report(const json& report, const RenderOptions& options) {
    json shown = display_values(report, options.basis_points, false);
    shown["spread_units"] = options.basis_points ? "bp" : "decimal";
    if (!options.pretty)
        return shown.dump(2) + "\n";
    std::string out;
    pretty_print(shown, out, 0);
    return out;
}

} // namespace replica
