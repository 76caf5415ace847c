#include <doctest.h>

#include <sstream>
#include <string>

#include "sclera/analysis.hpp"
#include "sclera/report.hpp"
#include "sclera/scenario.hpp"

using namespace sclera;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("timeseries export pairs rows for chained jumps") {
  const ScenarioConfig c = preset_scenario("s1");
  const SolveResult r = run_classified(c.initial_state(), c.params, c.solver, c.cycle_tol);
  const std::string csv = render_timeseries_csv(r.arc, 0.01);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,j,x1,x2,x3,q1,q2,q3,q4");
  // Two flips fire at t = 0; each contributes its own pre/post rows.
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,0,");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,1,");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,1,");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,2,");
  CHECK_THROWS_AS(render_timeseries_csv(r.arc, 0.0), std::invalid_argument);
}

TEST_CASE("jump log lists every flip with its latch words") {
  const ScenarioConfig c = preset_scenario("s1");
  const SolveResult r = run_classified(c.initial_state(), c.params, c.solver, c.cycle_tol);
  const std::string csv = render_jump_log_csv(r.arc);
  CHECK(count_lines(csv) == static_cast<std::size_t>(r.verdict.total_jumps) + 1);
  CHECK(csv.find("0,1,1,1101,0101\n") != std::string::npos);
  CHECK(csv.find("0,2,2,0101,0001\n") != std::string::npos);
}

TEST_CASE("summaries name the verdict and classification") {
  auto summary_for = [](const std::string& id) {
    const ScenarioConfig c = preset_scenario(id);
    const SolveResult r = run_classified(c.initial_state(), c.params, c.solver, c.cycle_tol);
    return render_summary(c, r);
  };
  const std::string s1 = summary_for("s1");
  CHECK(s1.find("verdict: equilibrium") != std::string::npos);
  CHECK(s1.find("Extinction equilibrium (0, 0, 0)") != std::string::npos);

  const std::string s3 = summary_for("s3");
  CHECK(s3.find("Saturation equilibrium (0.55, 1, 0.9)") != std::string::npos);

  const std::string s5 = summary_for("s5");
  CHECK(s5.find("verdict: limit-cycle") != std::string::npos);
  CHECK(s5.find("LimitCycle: period 0.897") != std::string::npos);
  CHECK(s5.find("4 jumps per period") != std::string::npos);

  const std::string s7 = summary_for("s7");
  CHECK(s7.find("verdict: zeno-suspected") != std::string::npos);
}

TEST_CASE("sweep table carries axis columns and cell summaries") {
  const ScenarioConfig c = preset_scenario("s5");
  SolverConfig cfg = c.solver;
  cfg.t_max = 15.0;
  const std::array axes{SweepAxis{"h", 0.0, 0.02, 3}};
  const SweepGrid grid = sweep(c.params, axes, c.initial_state(), cfg);
  const std::string csv = render_sweep_csv(grid);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "h,verdict,class,x1_star,x2_star,x3_star,period,error");
  CHECK(count_lines(csv) == 4);
  CHECK(csv.find("limit-cycle") != std::string::npos);
}

TEST_CASE("phase portraits render in both projections") {
  ScenarioConfig c = preset_scenario("s5");
  c.solver.t_max = 10.0;
  const SolveResult r = run_classified(c.initial_state(), c.params, c.solver, c.cycle_tol);

  const std::string svg3 = render_phase_svg(r.arc, c);
  CHECK(svg3.find("<svg") != std::string::npos);
  CHECK(svg3.find("<polyline") != std::string::npos);
  CHECK(svg3.find("initial point") != std::string::npos);
  CHECK(svg3.find("orthographic") != std::string::npos);

  c.output.plot = "2d";
  c.output.plot_axes = {0, 2};
  const std::string svg2 = render_phase_svg(r.arc, c);
  CHECK(svg2.find("x1 vs x3") != std::string::npos);
  // the asterisk marker is three crossing strokes
  std::size_t strokes = 0, pos = 0;
  while ((pos = svg2.find("<line", pos)) != std::string::npos) {
    ++strokes;
    pos += 5;
  }
  CHECK(strokes == 3);
}
