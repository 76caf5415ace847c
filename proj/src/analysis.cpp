#include "sclera/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace sclera {

namespace {

double sup_dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

std::optional<CycleReport> detect_cycle(const HybridArc& arc, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("cycle tolerance must be positive");
  const std::vector<JumpRecord> jumps = arc.jumps();
  const std::size_t n = jumps.size();
  if (n < 4) return std::nullopt;

  for (std::size_t l = 1; l < n; ++l) {
    for (std::size_t gap = 1; gap <= l && l + gap <= n; ++gap) {
      const std::size_t k = l - gap;
      if (jumps[l].t - jumps[k].t <= 0.0) continue;
      if (jumps[l].post.q != jumps[k].post.q) continue;
      if (sup_dist(jumps[l].post.x, jumps[k].post.x) > tol) continue;
      // Flip sequence must repeat once more, and every matched state pair
      // across the two periods must agree within tol.
      bool ok = true;
      double residual = 0.0;
      for (std::size_t m = k; m < l && ok; ++m) {
        if (jumps[m].cause != jumps[m + gap].cause) {
          ok = false;
          break;
        }
        const double d = sup_dist(jumps[m].post.x, jumps[m + gap].post.x);
        if (d > tol) {
          ok = false;
          break;
        }
        residual = std::max(residual, d);
      }
      if (!ok) continue;

      CycleReport report;
      report.period = jumps[l].t - jumps[k].t;
      report.jumps_per_period = static_cast<int>(gap);
      report.residual = residual;
      for (std::size_t m = k; m < l; ++m)
        report.waypoints.emplace_back(HybridTime{jumps[m].t, jumps[m].j_after}, jumps[m].post);
      return report;
    }
  }
  return std::nullopt;
}

const char* to_string(EquilibriumClass c) {
  switch (c) {
    case EquilibriumClass::Extinction: return "extinction";
    case EquilibriumClass::Saturation: return "saturation";
    case EquilibriumClass::Mixed: return "mixed";
  }
  return "unknown";
}

EquilibriumClass classify_equilibrium(const TrajectoryVerdict& verdict, const NetworkParams& p) {
  if (verdict.kind != VerdictKind::EquilibriumReached || !verdict.equilibrium)
    throw std::invalid_argument("classify_equilibrium requires an equilibrium verdict");
  const std::array<double, 3>& x = verdict.equilibrium->x_star;
  if (x[0] == 0.0 && x[1] == 0.0 && x[2] == 0.0) return EquilibriumClass::Extinction;
  bool saturated = true;
  for (int i = 0; i < 3; ++i)
    if (x[i] != p.growth[i] / p.decay[i]) saturated = false;
  return saturated ? EquilibriumClass::Saturation : EquilibriumClass::Mixed;
}

TrajectoryVerdict classify_long_run(const HybridArc& arc, const TrajectoryVerdict& raw,
                                    double cycle_tol) {
  if (raw.kind != VerdictKind::HorizonExhausted) return raw;
  auto cycle = detect_cycle(arc, cycle_tol);
  if (!cycle) return raw;
  TrajectoryVerdict v = raw;
  v.kind = VerdictKind::LimitCycle;
  v.cycle = std::move(cycle);
  return v;
}

SolveResult run_classified(const HybridState& z0, const NetworkParams& p,
                           const SolverConfig& cfg, double cycle_tol) {
  SolveResult r = simulate(z0, p, cfg);
  r.verdict = classify_long_run(r.arc, r.verdict, cycle_tol);
  return r;
}

std::vector<double> axis_values(const SweepAxis& axis) {
  if (axis.steps < 1) throw std::invalid_argument("axis '" + axis.param + "': steps must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(axis.steps));
  if (axis.steps == 1) {
    values.push_back(axis.from);
    return values;
  }
  for (int i = 0; i < axis.steps; ++i)
    values.push_back(axis.from + (axis.to - axis.from) * i / (axis.steps - 1));
  return values;
}

void apply_axis_value(NetworkParams& p, const std::string& param, double value) {
  auto set_indexed = [&](std::span<double> field, const char* stem) {
    for (std::size_t i = 0; i < field.size(); ++i)
      if (param == stem + std::to_string(i + 1)) {
        field[i] = value;
        return true;
      }
    return false;
  };
  if (param == "k") { p.growth.fill(value); return; }
  if (param == "g") { p.decay.fill(value); return; }
  if (param == "th") { p.threshold.fill(value); return; }
  if (param == "h") { p.hysteresis.fill(value); return; }
  if (set_indexed(p.growth, "k")) return;
  if (set_indexed(p.decay, "g")) return;
  if (set_indexed(p.threshold, "th")) return;
  if (set_indexed(p.hysteresis, "h")) return;
  throw std::invalid_argument("unknown sweep parameter '" + param + "'");
}

SweepGrid sweep(const NetworkParams& base, std::span<const SweepAxis> axes,
                const HybridState& z0, const SolverConfig& cfg, double cycle_tol,
                int workers) {
  if (axes.empty()) throw std::invalid_argument("sweep requires at least one axis");
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");

  SweepGrid grid;
  grid.axes.assign(axes.begin(), axes.end());
  std::vector<std::vector<double>> values;
  std::size_t cell_count = 1;
  for (const SweepAxis& axis : axes) {
    values.push_back(axis_values(axis));
    // Reject axis names early so a bad sweep fails before any cell runs.
    NetworkParams probe = base;
    apply_axis_value(probe, axis.param, values.back().front());
    cell_count *= values.back().size();
  }
  grid.cells.resize(cell_count);

  auto run_cell = [&](std::size_t index) {
    SweepCell& cell = grid.cells[index];
    NetworkParams p = base;
    std::size_t rem = index;
    cell.values.resize(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      const std::size_t m = values[a].size();
      const double v = values[a][rem % m];
      rem /= m;
      cell.values[a] = v;
    }
    try {
      for (std::size_t a = 0; a < axes.size(); ++a)
        apply_axis_value(p, axes[a].param, cell.values[a]);
      const auto issues = validate_params(p);
      for (const ParamIssue& issue : issues)
        if (issue.severity == IssueSeverity::Error) {
          cell.error = issue.field + ": " + issue.message;
          return;
        }
      SolverConfig cell_cfg = cfg;
      cell_cfg.seed = cfg.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
      const SolveResult r = run_classified(z0, p, cell_cfg, cycle_tol);
      cell.kind = r.verdict.kind;
      if (r.verdict.equilibrium) {
        cell.x_star = r.verdict.equilibrium->x_star;
        cell.equilibrium_class = classify_equilibrium(r.verdict, p);
      }
      if (r.verdict.cycle) cell.period = r.verdict.cycle->period;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  };

  const int n_workers = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(workers), cell_count));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < cell_count; ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cell_count; i = next.fetch_add(1))
          run_cell(i);
      });
    for (std::thread& th : pool) th.join();
  }
  return grid;
}

}  // namespace sclera
