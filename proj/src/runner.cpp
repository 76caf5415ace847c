#include "sclera/runner.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "sclera/report.hpp"

namespace sclera::cli {

namespace {

namespace fs = std::filesystem;

void apply_overrides(ScenarioConfig& config, const Overrides& ov) {
  if (ov.out_dir) config.output.dir = *ov.out_dir;
  if (ov.seed) config.solver.seed = *ov.seed;
  if (ov.t_max) config.solver.t_max = *ov.t_max;
  if (ov.j_max) config.solver.j_max = *ov.j_max;
  if (ov.sample_spacing) config.output.sample_spacing = *ov.sample_spacing;
  if (ov.plot) config.output.plot = *ov.plot ? (config.output.plot == "2d" ? "2d" : "3d") : "off";
}

fs::path output_dir(const ScenarioConfig& config) {
  if (!config.output.dir.empty()) return config.output.dir;
  return config.name.empty() ? fs::path("scenario-out") : fs::path(config.name + "-out");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

/// Prints findings; returns true when any is an error.
bool report_issues(const std::vector<ParamIssue>& issues, std::ostream& err) {
  bool fatal = false;
  for (const ParamIssue& issue : issues) {
    const bool is_error = issue.severity == IssueSeverity::Error;
    fatal = fatal || is_error;
    err << (is_error ? "error" : "warning") << ": " << issue.field << ": " << issue.message
        << "\n";
  }
  return fatal;
}

}  // namespace

int run_scenario(ScenarioConfig config, const Overrides& ov, std::ostream& out,
                 std::ostream& err) {
  apply_overrides(config, ov);
  if (report_issues(validate_scenario(config), err)) return kExitValidationError;
  try {
    const SolveResult result =
        run_classified(config.initial_state(), config.params, config.solver, config.cycle_tol);

    const fs::path dir = output_dir(config);
    fs::create_directories(dir);
    write_file(dir / "timeseries.csv",
               render_timeseries_csv(result.arc, config.output.sample_spacing));
    write_file(dir / "jumps.csv", render_jump_log_csv(result.arc));
    const std::string summary = render_summary(config, result);
    write_file(dir / "summary.txt", summary);
    write_file(dir / "config.json", serialize_scenario(config));
    if (config.output.plot != "off")
      write_file(dir / "phase.svg", render_phase_svg(result.arc, config));

    out << summary;
    out << "artifacts: " << dir.string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

int cmd_run(const std::string& config_path, const Overrides& ov, std::ostream& out,
            std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_scenario(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run_scenario(std::move(config), ov, out, err);
}

int cmd_reproduce(const std::string& preset_id, const Overrides& ov, std::ostream& out,
                  std::ostream& err) {
  ScenarioConfig config;
  try {
    config = preset_scenario(preset_id);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run_scenario(std::move(config), ov, out, err);
}

int cmd_sweep(const std::string& config_path, const Overrides& ov, std::ostream& out,
              std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_scenario(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  apply_overrides(config, ov);
  if (config.axes.empty()) {
    err << "error: axes: sweep requires at least one axis\n";
    return kExitValidationError;
  }
  if (report_issues(validate_scenario(config), err)) return kExitValidationError;
  try {
    const SweepGrid grid = sweep(config.params, config.axes, config.initial_state(),
                                 config.solver, config.cycle_tol, ov.workers);
    const fs::path dir = output_dir(config);
    fs::create_directories(dir);
    const std::string table = render_sweep_csv(grid);
    write_file(dir / "sweep.csv", table);
    write_file(dir / "config.json", serialize_scenario(config));
    out << table;
    out << "artifacts: " << dir.string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_scenario(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  const auto issues = validate_scenario(config);
  if (report_issues(issues, err)) return kExitValidationError;
  out << "ok: " << config.name << " ("
      << (issues.empty() ? "no findings" : "warnings only") << ")\n";
  return kExitOk;
}

}  // namespace sclera::cli
