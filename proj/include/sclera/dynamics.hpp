#ifndef SCLERA_DYNAMICS_HPP_
#define SCLERA_DYNAMICS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sclera/core.hpp"

/// Flow map, switching sets and latch flips of the network.
///
/// The wiring is fixed: TIMP-2 (x1) is produced when latch q4 is on, MT1-MMP
/// (x2) when q1 is on and q3 off, MMP-2 (x3) when q2 is on and q3 off. Each
/// latch i watches one concentration against a hysteresis band
/// [threshold_i - h_i, threshold_i + h_i]: with the latch on, the switching
/// surface is the lower edge; with it off, the upper edge. Membership is
/// non-strict, so a state sitting exactly on its active edge must jump.
namespace sclera {

/// Affine flow data of one latch configuration: per-coordinate on/off input,
/// fixed point (growth * input / decay) and relaxation rate.
struct ModeDescriptor {
  std::array<bool, 4> q{false, false, false, false};
  std::array<double, 3> input{0.0, 0.0, 0.0};
  std::array<AffineFlow, 3> flow;
};

/// Mode data for latch configuration q. The targets are the fixed points
/// each concentration relaxes toward while q holds.
ModeDescriptor mode_target(const std::array<bool, 4>& q, const NetworkParams& p);

/// Concentration velocities (dx1/dt, dx2/dt, dx3/dt); the latches carry
/// zero flow by definition.
std::array<double, 3> flow_map(const HybridState& z, const NetworkParams& p);

/// Coordinate (0-based) watched by switching family i in 1..4:
/// families 1 and 3 watch x1, family 2 watches x2, family 4 watches x3.
int watched_coordinate(int family);

/// The hysteresis edge family i currently switches at, given its latch.
double active_edge(int family, bool latch_on, const NetworkParams& p);

/// Indices i with z in the family-i switching set, ascending. Empty means z
/// may only flow.
std::vector<int> jump_set_membership(const HybridState& z, const NetworkParams& p);

/// Flip latch `family`, preserving x and the other latches.
HybridState apply_flip(const HybridState& z, int family);

/// All single-flip successors for the active families, in ascending family
/// order. Throws std::invalid_argument when `active` is empty: jumping
/// outside the switching set is undefined.
std::vector<HybridState> jump_map(const HybridState& z, const std::vector<int>& active);

/// How a simulation chooses among simultaneously active flips.
enum class JumpPolicy { LowestIndex, SeededRandom };

/// Selection state for one run. LowestIndex ignores the seed; SeededRandom
/// draws uniformly from a generator seeded once per run, so identical seeds
/// replay identical choices.
class JumpSelector {
 public:
  JumpSelector(JumpPolicy policy, std::uint64_t seed) : policy_(policy), rng_(seed) {}

  /// Chosen family from a nonempty ascending active list.
  int pick(const std::vector<int>& active);

 private:
  JumpPolicy policy_;
  std::mt19937_64 rng_;
};

/// Successor state for one jump: applies the selector's choice.
HybridState resolve_jump(const HybridState& z, const std::vector<int>& active,
                         JumpSelector& selector);

}  // namespace sclera

#endif  // SCLERA_DYNAMICS_HPP_
