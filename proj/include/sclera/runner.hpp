#ifndef SCLERA_RUNNER_HPP_
#define SCLERA_RUNNER_HPP_

#include <optional>
#include <string>

#include "sclera/scenario.hpp"

/// Command implementations behind the command-line tool, exposed as a
/// library so they stay directly testable.
namespace sclera::cli {

/// Process exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitRuntimeError = 4;

/// Command-line overrides applied on top of a loaded scenario.
struct Overrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> t_max;
  std::optional<std::int64_t> j_max;
  std::optional<double> sample_spacing;
  std::optional<bool> plot;
  int workers = 1;
};

/// Simulates a scenario file and writes timeseries.csv, jumps.csv,
/// summary.txt, config.json and (unless plotting is off) phase.svg into the
/// output directory. The summary is also printed to `out`.
int cmd_run(const std::string& config_path, const Overrides& ov, std::ostream& out,
            std::ostream& err);

/// Runs a bundled figure preset (ids: s1, s3, s5, s7); artifacts as cmd_run.
int cmd_reproduce(const std::string& preset_id, const Overrides& ov, std::ostream& out,
                  std::ostream& err);

/// Runs the sweep described by a scenario file with axes; writes sweep.csv
/// and config.json. Output content is independent of the worker count.
int cmd_sweep(const std::string& config_path, const Overrides& ov, std::ostream& out,
              std::ostream& err);

/// Parses and validates a scenario file, printing all findings.
int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err);

/// Shared by cmd_run/cmd_reproduce once the scenario is in memory.
int run_scenario(ScenarioConfig config, const Overrides& ov, std::ostream& out,
                 std::ostream& err);

}  // namespace sclera::cli

#endif  // SCLERA_RUNNER_HPP_
