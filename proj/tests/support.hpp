#ifndef SCLERA_TESTS_SUPPORT_HPP_
#define SCLERA_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sclera/analysis.hpp"
#include "sclera/core.hpp"
#include "sclera/dynamics.hpp"
#include "sclera/solver.hpp"

namespace sclera::test {

/// Structural well-formedness of a produced arc; returns human-readable
/// problems (empty == good). Run as a post-pass on every test trajectory.
inline std::vector<std::string> check_arc(const HybridArc& arc, const NetworkParams& p) {
  std::vector<std::string> bad;
  auto complain = [&bad](std::size_t n, const std::string& what) {
    std::ostringstream os;
    os << "segment " << n << ": " << what;
    bad.push_back(os.str());
  };
  if (arc.segments.empty()) return {"arc has no segments"};
  if (arc.segments.back().jump_cause) bad.push_back("terminal segment carries a jump cause");
  if (arc.segments.front().begin.t != 0.0 || arc.segments.front().begin.j != 0)
    bad.push_back("arc does not start at hybrid time (0, 0)");

  for (std::size_t n = 0; n < arc.segments.size(); ++n) {
    const ArcSegment& seg = arc.segments[n];
    if (seg.end.t < seg.begin.t) complain(n, "time runs backward");
    if (seg.begin.j != seg.end.j) complain(n, "jump counter changes inside a segment");
    if (seg.state0.q != seg.state1.q) complain(n, "latches change inside a segment");
    const auto mode = mode_target(seg.state0.q, p);
    for (int i = 0; i < 3; ++i) {
      if (seg.flow[i].target != mode.flow[i].target || seg.flow[i].rate != mode.flow[i].rate)
        complain(n, "stored flow data disagrees with the latch configuration");
      if (seg.state0.x[i] < 0.0 || seg.state1.x[i] < 0.0)
        complain(n, "negative concentration at a segment endpoint");
      // Monotone relaxation toward the target.
      const double d0 = seg.state0.x[i] - seg.flow[i].target;
      const double d1 = seg.state1.x[i] - seg.flow[i].target;
      if (std::abs(d1) > std::abs(d0) * (1.0 + 1e-12) + 1e-15)
        complain(n, "coordinate moved away from its target");
      if (d0 * d1 < 0.0) complain(n, "coordinate crossed its own target");
    }
    if (n + 1 < arc.segments.size()) {
      const ArcSegment& next = arc.segments[n + 1];
      if (!seg.jump_cause) {
        complain(n, "interior segment without a jump cause");
        continue;
      }
      if (next.begin.t != seg.end.t) complain(n, "time gap at a jump");
      if (next.begin.j != seg.end.j + 1) complain(n, "jump counter did not advance by 1");
      if (next.state0.x != seg.state1.x) complain(n, "jump modified a concentration");
      int flipped = 0;
      for (int i = 0; i < 4; ++i)
        if (next.state0.q[i] != seg.state1.q[i]) ++flipped;
      if (flipped != 1 || next.state0.q[*seg.jump_cause - 1] == seg.state1.q[*seg.jump_cause - 1])
        complain(n, "jump did not flip exactly the recorded latch");
    }
  }
  return bad;
}

inline bool arcs_identical(const HybridArc& a, const HybridArc& b) {
  if (a.stop != b.stop || a.segments.size() != b.segments.size()) return false;
  for (std::size_t n = 0; n < a.segments.size(); ++n) {
    const ArcSegment &sa = a.segments[n], &sb = b.segments[n];
    if (!(sa.begin == sb.begin && sa.end == sb.end && sa.state0 == sb.state0 &&
          sa.state1 == sb.state1 && sa.jump_cause == sb.jump_cause))
      return false;
    for (int i = 0; i < 3; ++i)
      if (sa.flow[i].target != sb.flow[i].target || sa.flow[i].rate != sb.flow[i].rate)
        return false;
  }
  return true;
}

struct Draw {
  NetworkParams p;
  HybridState z0;
};

/// Valid random parameters (strictly positive hysteresis) and a random
/// in-space initial state.
inline Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.1, 3.0);
  std::uniform_real_distribution<double> thr(0.15, 2.0);
  std::uniform_real_distribution<double> conc(0.0, 2.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Draw d;
  for (int i = 0; i < 3; ++i) {
    d.p.growth[i] = rate(rng);
    d.p.decay[i] = rate(rng);
  }
  for (int i = 0; i < 4; ++i) {
    d.p.threshold[i] = thr(rng);
    const double h_cap = std::min(0.15, 0.9 * d.p.threshold[i]);
    d.p.hysteresis[i] = 1e-3 + (h_cap - 1e-3) * unit(rng);
  }
  std::array<double, 3> x{conc(rng), conc(rng), conc(rng)};
  std::array<bool, 4> q{unit(rng) < 0.5, unit(rng) < 0.5, unit(rng) < 0.5, unit(rng) < 0.5};
  d.z0 = HybridState(x, q);
  return d;
}

/// Bisection root of target + (x0 - target) * exp(-rate t) == level on
/// [0, hi]; the bracket must straddle.
inline double bisect_crossing(double x0, double target, double rate, double level, double hi) {
  auto f = [&](double t) { return affine_state_after({target, rate}, x0, t) - level; };
  double lo = 0.0;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (flo * fhi > 0.0) return -1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sclera::test

#endif  // SCLERA_TESTS_SUPPORT_HPP_
