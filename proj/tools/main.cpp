#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "sclera/runner.hpp"

namespace {

struct CommonFlags {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> t_max;
  std::optional<std::int64_t> j_max;
  std::optional<double> spacing;
  bool plot = true;
  bool no_plot = false;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_workers) {
  cmd->add_option("-o,--out", f.out_dir, "Artifact directory (default: <name>-out)");
  cmd->add_option("--seed", f.seed, "Seed override for the jump-selection policy");
  cmd->add_option("--t-max", f.t_max, "Continuous-time horizon override");
  cmd->add_option("--j-max", f.j_max, "Jump budget override");
  cmd->add_option("--spacing", f.spacing, "Dense-export sample spacing override");
  cmd->add_flag("--no-plot", f.no_plot, "Skip the phase portrait");
  if (with_workers)
    cmd->add_option("-w,--workers", f.workers, "Worker threads for sweep cells")
        ->check(CLI::PositiveNumber);
}

sclera::cli::Overrides to_overrides(const CommonFlags& f) {
  sclera::cli::Overrides ov;
  ov.out_dir = f.out_dir;
  ov.seed = f.seed;
  ov.t_max = f.t_max;
  ov.j_max = f.j_max;
  ov.sample_spacing = f.spacing;
  if (f.no_plot) ov.plot = false;
  ov.workers = f.workers;
  return ov;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hysteretic scleral protease network simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset_id;
  CommonFlags run_flags, rep_flags, sweep_flags;

  CLI::App* run = app.add_subcommand("run", "Simulate a scenario file");
  run->add_option("config", config_path, "Scenario JSON file")->required();
  add_common(run, run_flags, false);

  CLI::App* rep = app.add_subcommand("reproduce", "Run a bundled figure preset (s1, s3, s5, s7)");
  rep->add_option("id", preset_id, "Preset id")->required();
  add_common(rep, rep_flags, false);

  CLI::App* swp = app.add_subcommand("sweep", "Run the parameter sweep of a scenario file");
  swp->add_option("config", config_path, "Scenario JSON file with axes")->required();
  add_common(swp, sweep_flags, true);

  CLI::App* val = app.add_subcommand("validate", "Check a scenario file and report findings");
  val->add_option("config", config_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    // Help/version exit cleanly; anything else is a usage problem.
    return rc == 0 ? sclera::cli::kExitOk : sclera::cli::kExitConfigError;
  }

  if (run->parsed())
    return sclera::cli::cmd_run(config_path, to_overrides(run_flags), std::cout, std::cerr);
  if (rep->parsed())
    return sclera::cli::cmd_reproduce(preset_id, to_overrides(rep_flags), std::cout, std::cerr);
  if (swp->parsed())
    return sclera::cli::cmd_sweep(config_path, to_overrides(sweep_flags), std::cout, std::cerr);
  return sclera::cli::cmd_validate(config_path, std::cout, std::cerr);
}
