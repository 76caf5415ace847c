#ifndef SCLERA_CORE_HPP_
#define SCLERA_CORE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

/// Shared value types for the scleral protease network simulator.
///
/// The model is a hybrid (flow + jump) system over three protein
/// concentrations (TIMP-2, MT1-MMP, MMP-2) and four boolean hysteresis
/// latches. Everything in this header is an immutable-by-convention value
/// type: cheap to copy and safe to share across threads.
namespace sclera {

/// Continuous + discrete state of the network.
///
/// The latches are stored as exact booleans, never floats, so switching-set
/// membership tests compare exactly. Concentrations must be nonnegative;
/// construction rejects anything else.
struct HybridState {
  std::array<double, 3> x{0.0, 0.0, 0.0};          ///< TIMP-2, MT1-MMP, MMP-2
  std::array<bool, 4> q{false, false, false, false};

  HybridState() = default;

  /// Throws std::invalid_argument if any concentration is negative or
  /// non-finite.
  HybridState(const std::array<double, 3>& conc, const std::array<bool, 4>& latches);

  bool operator==(const HybridState&) const = default;
};

/// Rate and switching constants.
///
/// Quantities are dimensionless (the model has no calibrated physical
/// units). Defaults match the simulator's stock scenario family.
struct NetworkParams {
  std::array<double, 3> growth{1.0, 1.0, 1.0};  ///< production rate per concentration
  std::array<double, 3> decay{1.0, 1.0, 1.0};   ///< first-order decay rate, > 0
  std::array<double, 4> threshold{0.4, 0.5, 0.6, 0.7};
  std::array<double, 4> hysteresis{0.01, 0.01, 0.01, 0.01};  ///< half-widths, >= 0

  bool operator==(const NetworkParams&) const = default;
};

enum class IssueSeverity { Error, Warning };

/// One validation finding. `field` names the offending parameter.
struct ParamIssue {
  IssueSeverity severity = IssueSeverity::Error;
  std::string field;
  std::string message;
};

/// Checks the hard parameter invariants (positive rates and thresholds,
/// nonnegative half-widths, both hysteresis edges above zero) and the one
/// structural soft check: when threshold1 + h1 >= threshold3 - h3 the
/// MT1-MMP input window is empty and x2 can never be expressed. That case
/// is reported as a warning, never an error.
std::vector<ParamIssue> validate_params(const NetworkParams& p);

/// True when validate_params reports no Error-severity issue.
bool params_valid(const NetworkParams& p);

/// A point (t, j) of a hybrid time domain: elapsed continuous time and
/// cumulative jump count. Both are non-decreasing along a solution.
struct HybridTime {
  double t = 0.0;
  std::int64_t j = 0;

  bool operator==(const HybridTime&) const = default;
};

/// Exponential relaxation toward a constant: dx/dt = rate * (target - x).
struct AffineFlow {
  double target = 0.0;
  double rate = 1.0;
};

/// Value of the relaxation after `dt` time units starting from `x0`.
double affine_state_after(const AffineFlow& f, double x0, double dt);

/// Why a solver run stopped producing the arc.
enum class StopReason {
  Equilibrium,  ///< no switching surface reachable; limit known analytically
  Horizon,      ///< continuous-time budget exhausted
  JumpBudget,   ///< jump-count budget exhausted
  ZenoWindow    ///< too many jumps in a vanishing time window
};

/// One maximal flow interval of a solution. The latches are constant within
/// a segment; each concentration relaxes exponentially toward its mode
/// target, hence is monotone. `jump_cause` names the switching family
/// (1..4) whose surface terminated the segment, if any. Jumps change only
/// the latches, so the next segment's state0 carries the same x as state1.
struct ArcSegment {
  HybridTime begin;
  HybridTime end;       ///< same j as begin; the terminating jump increments j
  HybridState state0;   ///< state entering the segment
  HybridState state1;   ///< state at end (pre-jump when jump_cause is set)
  std::array<AffineFlow, 3> flow;
  std::optional<int> jump_cause;

  double duration() const { return end.t - begin.t; }

  /// Closed-form state at absolute time t, begin.t <= t <= end.t.
  /// Endpoints return the stored states bit-exactly.
  HybridState state_at(double t) const;
};

/// Jump event reconstructed from two adjacent segments.
struct JumpRecord {
  double t = 0.0;
  std::int64_t j_after = 0;  ///< jump counter value once this jump is taken
  int cause = 0;             ///< switching family 1..4
  HybridState pre;
  HybridState post;
};

/// A solution: contiguous flow segments separated by latch flips.
/// Invariants: the last segment never carries a jump_cause, so
/// segments.size() == jump count + 1; segment n's end time/state meets
/// segment n+1's start up to the single flipped latch.
struct HybridArc {
  std::vector<ArcSegment> segments;
  StopReason stop = StopReason::Horizon;

  const HybridState& final_state() const { return segments.back().state1; }
  double end_time() const { return segments.back().end.t; }
  std::int64_t jump_count() const {
    return static_cast<std::int64_t>(segments.size()) - 1;
  }

  std::vector<JumpRecord> jumps() const;

  /// State at absolute time t within the arc's time span. At a jump
  /// instant the post-jump latches are returned; x is unaffected either way.
  HybridState state_at(double t) const;
};

/// Long-run classification of a solution.
enum class VerdictKind { EquilibriumReached, LimitCycle, ZenoSuspected, HorizonExhausted };

const char* to_string(VerdictKind k);

/// Analytically known limit of a run that can no longer switch.
struct EquilibriumPoint {
  std::array<double, 3> x_star{0.0, 0.0, 0.0};
  std::array<bool, 4> q_final{false, false, false, false};
};

/// A detected periodic orbit, reported at latch-flip resolution.
/// `waypoints` lists the post-jump states over one period; `residual` is
/// the largest state mismatch between matched flips of consecutive periods.
struct CycleReport {
  double period = 0.0;
  int jumps_per_period = 0;
  std::vector<std::pair<HybridTime, HybridState>> waypoints;
  double residual = 0.0;
};

struct TrajectoryVerdict {
  VerdictKind kind = VerdictKind::HorizonExhausted;
  std::optional<EquilibriumPoint> equilibrium;  ///< set iff EquilibriumReached
  std::optional<CycleReport> cycle;             ///< set iff LimitCycle
  std::array<std::int64_t, 4> jumps_by_family{0, 0, 0, 0};
  std::int64_t total_jumps = 0;
};

}  // namespace sclera

#endif  // SCLERA_CORE_HPP_
