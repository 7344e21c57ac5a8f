#pragma once

#include "replica/config.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace replica {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 2;
inline constexpr int numerical = 3;
inline constexpr int replication = 4;
} // namespace exit_code

/// Largest scenario residual accepted by `replicate` with the break clause on.
inline constexpr double kReplicationTolerance = 1e-10;

struct ReplicateOptions {
    bool clause_enabled = true;
    std::optional<std::size_t> mc_paths;
    std::uint64_t seed = 0;
};

struct CommandResult {
    nlohmann::json report;
    int exit_code = exit_code::ok;
};

CommandResult cmd_price(const MarketConfig& config);
CommandResult cmd_replicate(const MarketConfig& config, const ReplicateOptions& options);
CommandResult cmd_implied_repo(const MarketConfig& config);
CommandResult cmd_calibrate(const MarketConfig& config);

/// Maps library errors to the CLI exit codes.
int exit_code_for(const Error& error) noexcept;

struct RenderOptions {
    bool pretty = false;
    bool basis_points = false;
};

/// Numbers rounded to 12 significant digits; with basis_points every field
/// whose name ends in "_spread" is scaled by 1e4.
std::string render_report(const nlohmann::json& report, const RenderOptions& options);

} // namespace replica
