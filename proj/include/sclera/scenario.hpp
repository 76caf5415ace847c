#ifndef SCLERA_SCENARIO_HPP_
#define SCLERA_SCENARIO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "sclera/analysis.hpp"
#include "sclera/core.hpp"
#include "sclera/solver.hpp"

/// Scenario files: a versioned, diff-friendly JSON schema holding the
/// parameters, initial state, solver budget and output options of one run
/// (or of a sweep, when axes are present), plus the four bundled
/// figure-reproduction presets.
namespace sclera {

/// Raised on unreadable, syntactically invalid or schema-violating config
/// text. Value-range problems are reported by validate_scenario instead.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  double sample_spacing = 0.01;  ///< dense-export grid step, > 0
  std::string dir;               ///< artifact directory; empty derives "<name>-out"
  std::string plot = "3d";       ///< "off", "2d" or "3d"
  std::array<int, 2> plot_axes{0, 2};  ///< 2d projection coordinates (0-based)

  bool operator==(const OutputOptions&) const = default;
};

struct ScenarioConfig {
  int schema_version = 1;
  std::string name;
  NetworkParams params;
  std::array<double, 3> initial_x{0.0, 0.0, 0.0};
  std::array<bool, 4> initial_q{false, false, false, false};
  SolverConfig solver;
  double cycle_tol = kDefaultCycleTol;
  OutputOptions output;
  std::vector<SweepAxis> axes;  ///< nonempty for sweep scenarios

  /// Throws std::invalid_argument when initial_x is out of the state space.
  HybridState initial_state() const { return HybridState(initial_x, initial_q); }

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parses scenario JSON. Throws ConfigError on syntax errors, wrong types,
/// unknown keys or an unsupported schema_version.
ScenarioConfig parse_scenario(const std::string& json_text);

/// Reads and parses a scenario file. Throws ConfigError (also on I/O).
ScenarioConfig load_scenario(const std::string& path);

/// Full-fidelity JSON echo; parse_scenario(serialize_scenario(c)) == c.
std::string serialize_scenario(const ScenarioConfig& c);

/// Value-range validation: parameter invariants, nonnegative initial
/// concentrations, positive budgets and spacing, known sweep-axis names.
std::vector<ParamIssue> validate_scenario(const ScenarioConfig& c);

/// Bundled figure presets: ids "s1", "s3", "s5", "s7".
/// Throws std::invalid_argument on an unknown id.
ScenarioConfig preset_scenario(const std::string& id);

const std::vector<std::string>& preset_ids();

}  // namespace sclera

#endif  // SCLERA_SCENARIO_HPP_
