#include "sclera/dynamics.hpp"

#include <stdexcept>

namespace sclera {

ModeDescriptor mode_target(const std::array<bool, 4>& q, const NetworkParams& p) {
  ModeDescriptor m;
  m.q = q;
  m.input[0] = q[3] ? 1.0 : 0.0;
  m.input[1] = (q[0] && !q[2]) ? 1.0 : 0.0;
  m.input[2] = (q[1] && !q[2]) ? 1.0 : 0.0;
  for (int i = 0; i < 3; ++i) {
    m.flow[i].target = p.growth[i] * m.input[i] / p.decay[i];
    m.flow[i].rate = p.decay[i];
  }
  return m;
}

std::array<double, 3> flow_map(const HybridState& z, const NetworkParams& p) {
  const double q1 = z.q[0] ? 1.0 : 0.0;
  const double q2 = z.q[1] ? 1.0 : 0.0;
  const double not_q3 = z.q[2] ? 0.0 : 1.0;
  const double q4 = z.q[3] ? 1.0 : 0.0;
  return {p.growth[0] * q4 - p.decay[0] * z.x[0],
          p.growth[1] * q1 * not_q3 - p.decay[1] * z.x[1],
          p.growth[2] * q2 * not_q3 - p.decay[2] * z.x[2]};
}

int watched_coordinate(int family) {
  switch (family) {
    case 1:
    case 3: return 0;
    case 2: return 1;
    case 4: return 2;
  }
  throw std::invalid_argument("switching family must be 1..4");
}

double active_edge(int family, bool latch_on, const NetworkParams& p) {
  const int i = family - 1;
  return latch_on ? p.threshold[i] - p.hysteresis[i] : p.threshold[i] + p.hysteresis[i];
}

std::vector<int> jump_set_membership(const HybridState& z, const NetworkParams& p) {
  std::vector<int> active;
  for (int family = 1; family <= 4; ++family) {
    const bool on = z.q[family - 1];
    const double xw = z.x[watched_coordinate(family)];
    const double edge = active_edge(family, on, p);
    const bool member = on ? (xw <= edge) : (xw >= edge);
    if (member) active.push_back(family);
  }
  return active;
}

HybridState apply_flip(const HybridState& z, int family) {
  if (family < 1 || family > 4) throw std::invalid_argument("switching family must be 1..4");
  HybridState out = z;
  out.q[family - 1] = !out.q[family - 1];
  return out;
}

std::vector<HybridState> jump_map(const HybridState& z, const std::vector<int>& active) {
  if (active.empty())
    throw std::invalid_argument("jump outside the switching set is undefined");
  std::vector<HybridState> successors;
  successors.reserve(active.size());
  for (int family : active) successors.push_back(apply_flip(z, family));
  return successors;
}

int JumpSelector::pick(const std::vector<int>& active) {
  if (active.empty())
    throw std::invalid_argument("jump outside the switching set is undefined");
  if (policy_ == JumpPolicy::LowestIndex || active.size() == 1) return active.front();
  // Modulo keeps the draw bit-reproducible across standard libraries; the
  // bias over at most four choices is far below anything observable.
  const std::size_t idx = static_cast<std::size_t>(rng_() % active.size());
  return active[idx];
}

HybridState resolve_jump(const HybridState& z, const std::vector<int>& active,
                         JumpSelector& selector) {
  return apply_flip(z, selector.pick(active));
}

}  // namespace sclera
