#ifndef SCLERA_ANALYSIS_HPP_
#define SCLERA_ANALYSIS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sclera/core.hpp"
#include "sclera/solver.hpp"

/// Long-run behavior classification and parameter-space cartography.
namespace sclera {

/// Default recurrence tolerance for cycle detection. Event times are
/// machine-precision, so converged orbits recur far tighter than this.
inline constexpr double kDefaultCycleTol = 1e-6;

/// Scans the arc's post-jump states for a periodic orbit. A cycle is
/// reported between jump instants k < l when the latches match, every
/// matched state pair across the two periods agrees within tol in sup norm,
/// and the flip sequence repeats at least once more within the arc. The
/// earliest qualifying pair wins; the reported period is the continuous-time
/// gap, which must be positive (instantaneous latch chatter never counts).
std::optional<CycleReport> detect_cycle(const HybridArc& arc, double tol = kDefaultCycleTol);

/// The two equilibria the model exhibits at stock parameters, plus the
/// mixed fixed points that arise when only part of the network stays on.
enum class EquilibriumClass { Extinction, Saturation, Mixed };

const char* to_string(EquilibriumClass c);

/// Labels an equilibrium verdict: Extinction at the origin, Saturation at
/// (growth/decay) for all three coordinates, Mixed otherwise.
/// Throws std::invalid_argument on a non-equilibrium verdict.
EquilibriumClass classify_equilibrium(const TrajectoryVerdict& verdict, const NetworkParams& p);

/// Final verdict for a finished run: upgrades an exhausted horizon to
/// LimitCycle when the arc contains a qualifying recurrence.
TrajectoryVerdict classify_long_run(const HybridArc& arc, const TrajectoryVerdict& raw,
                                    double cycle_tol = kDefaultCycleTol);

/// simulate + classify_long_run in one call.
SolveResult run_classified(const HybridState& z0, const NetworkParams& p,
                           const SolverConfig& cfg, double cycle_tol = kDefaultCycleTol);

/// One sweep dimension: a named parameter ("k1".."k3", "g1".."g3",
/// "th1".."th4", "h1".."h4", or the aggregates "k", "g", "th", "h" that set
/// the whole group) over an inclusive linear range.
struct SweepAxis {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;  ///< number of grid points, >= 1

  bool operator==(const SweepAxis&) const = default;
};

/// Returns the axis grid values (steps entries, endpoints inclusive).
std::vector<double> axis_values(const SweepAxis& axis);

/// Applies one axis value to a parameter set.
/// Throws std::invalid_argument naming the field when `param` is unknown.
void apply_axis_value(NetworkParams& p, const std::string& param, double value);

struct SweepCell {
  std::vector<double> values;  ///< axis values, one per axis
  VerdictKind kind = VerdictKind::HorizonExhausted;
  std::optional<EquilibriumClass> equilibrium_class;
  std::optional<std::array<double, 3>> x_star;
  std::optional<double> period;
  std::string error;  ///< nonempty when this cell failed; never aborts the sweep
};

struct SweepGrid {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells;  ///< row-major over the axes, first axis slowest
};

/// Simulates and classifies every grid cell. Cells are independent and run
/// on `workers` threads; the grid content is a pure function of the inputs,
/// byte-for-byte independent of the worker count. Per-cell seeds derive
/// from cfg.seed and the cell index only.
SweepGrid sweep(const NetworkParams& base, std::span<const SweepAxis> axes,
                const HybridState& z0, const SolverConfig& cfg,
                double cycle_tol = kDefaultCycleTol, int workers = 1);

}  // namespace sclera

#endif  // SCLERA_ANALYSIS_HPP_
