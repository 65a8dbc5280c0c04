#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ch2geo/connection.hpp"

namespace ch2geo::cli {

enum class Command { evolve, flowmap, curvature, curvature_scan, rigidbody, verify };

std::string_view to_string(Command command);

/// Fully validated run configuration with per-command defaults applied.
struct RunConfig {
    Command command = Command::evolve;
    std::optional<ModelId> model;  // evolve and flowmap only
    std::string ic = "cosmode:1:0.1";
    int n = 256;
    double dt = 1e-4;
    double t_end = 1.0;
    int stride = 100;
    double slope_threshold = -1e6;
    double rhox_threshold = 1e6;
    std::filesystem::path out = "out";
    std::uint64_t seed = 20240611;
    int max_mode = 3;
    std::array<int, 4> modes{1, 1, 2, 1};  // k1, k2, l1, l2; k1 = l1 = 0 selects (0, cos) directions
    std::array<double, 3> inertia{1.0, 2.0, 3.0};
    std::array<double, 3> omega{1.0, 1.0, 1.0};
};

/// Thrown by parse_config for --help; carries the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses argv. `--config file.json` supplies a base (a bare config object or
/// a run.json manifest); flags given on the command line override it.
/// Throws ConfigError naming the offending flag or key.
RunConfig parse_config(int argc, const char* const* argv);

/// Builds a config from JSON (keys as in the manifest echo). Unknown keys and
/// ill-typed values are rejected.
RunConfig config_from_json(const nlohmann::json& j);

/// The manifest echo: only the keys relevant to the command.
nlohmann::json config_to_json(const RunConfig& config);

/// Executes the command, writing artifacts under config.out.
/// Returns 0 on completion, 2 on a detected blow-up, 1 on a failed verify.
/// Errors propagate as exceptions.
int run(const RunConfig& config, std::ostream& log);

/// parse_config + run with error reporting; the process entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ch2geo::cli
