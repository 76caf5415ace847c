#ifndef SCLERA_SOLVER_HPP_
#define SCLERA_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sclera/core.hpp"
#include "sclera/dynamics.hpp"

/// Solution production.
///
/// Within one latch configuration every coordinate relaxes exponentially
/// toward a constant, so event times are roots of a scalar exponential and
/// can be computed in closed form. The production solver therefore never
/// steps: it hops from switching event to switching event exactly. A plain
/// forward-Euler integrator with interpolated event localization doubles as
/// an independent cross-check of the same semantics.
///
/// Semantics on the flow/jump overlap: whenever the state is in the
/// switching set, the jump is taken before any further flow. A state
/// resting exactly on its active edge jumps immediately.
namespace sclera {

struct SolverConfig {
  double t_max = 100.0;          ///< continuous horizon, > 0
  std::int64_t j_max = 10000;    ///< jump budget, >= 1
  int zeno_jumps = 50;           ///< window size for Zeno suspicion
  double zeno_span = 1e-9;       ///< continuous-time width of that window, > 0
  JumpPolicy policy = JumpPolicy::LowestIndex;
  std::uint64_t seed = 0;

  bool operator==(const SolverConfig&) const = default;
};

struct OracleConfig {
  double dt = 1e-4;       ///< fixed Euler step, > 0 and < 1/max(decay)
  int interp_order = 1;   ///< crossing localization: 0 = step end, 1 = linear
};

/// Smallest t > 0 with target + (x0 - target) * exp(-rate * t) == level,
/// or nullopt when the relaxation never attains `level` forward in time.
/// A start exactly at `level` is a departure, not a crossing, and returns
/// nullopt; membership at t = 0 is the jump logic's concern.
/// Throws std::invalid_argument on rate <= 0.
std::optional<double> crossing_time(double x0, double target, double rate, double level);

struct SolveResult {
  HybridArc arc;
  /// Raw termination verdict: EquilibriumReached, ZenoSuspected or
  /// HorizonExhausted. Upgrading an exhausted horizon to LimitCycle is the
  /// analysis layer's job.
  TrajectoryVerdict verdict;
};

/// Exact event-time simulation from z0. The arc always ends with a
/// causeless terminal segment; an equilibrium verdict records the analytic
/// limit point while the terminal segment still spans the remaining horizon
/// so the approach can be sampled. Identical inputs (including seed) yield
/// bit-identical results.
SolveResult simulate(const HybridState& z0, const NetworkParams& p, const SolverConfig& cfg);

/// Fixed-step cross-check record. `samples` holds the Euler-integrated
/// state at the covered prefix of the requested times (linearly
/// interpolated between steps); it is the integration record, not a
/// closed-form reconstruction.
struct OracleRun {
  HybridArc arc;
  std::vector<double> sample_times;
  std::vector<HybridState> samples;
};

/// Forward-Euler integration of the same hybrid semantics: step, test
/// membership, jump with the same policy. With interp_order 1 the crossing
/// is localized by linear interpolation inside the step and the watched
/// coordinate lands exactly on its edge. Verification path only.
OracleRun simulate_oracle(const HybridState& z0, const NetworkParams& p,
                          const SolverConfig& cfg, const OracleConfig& ocfg,
                          std::span<const double> wanted_times = {});

}  // namespace sclera

#endif  // SCLERA_SOLVER_HPP_
