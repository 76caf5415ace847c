#include "sclera/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sclera {

HybridState::HybridState(const std::array<double, 3>& conc, const std::array<bool, 4>& latches)
    : x(conc), q(latches) {
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("concentration must be finite");
    if (x[i] < 0.0) throw std::invalid_argument("concentration must be nonnegative");
  }
}

namespace {

std::string indexed(const char* stem, int i) {
  std::ostringstream os;
  os << stem << (i + 1);
  return os.str();
}

}  // namespace

std::vector<ParamIssue> validate_params(const NetworkParams& p) {
  std::vector<ParamIssue> issues;
  auto err = [&issues](std::string field, std::string msg) {
    issues.push_back({IssueSeverity::Error, std::move(field), std::move(msg)});
  };
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(p.growth[i]) || p.growth[i] <= 0.0)
      err(indexed("k", i), "growth rate must be positive");
    if (!std::isfinite(p.decay[i]) || p.decay[i] <= 0.0)
      err(indexed("g", i), "decay rate must be positive");
  }
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(p.threshold[i]) || p.threshold[i] <= 0.0)
      err(indexed("th", i), "threshold must be positive");
    if (!std::isfinite(p.hysteresis[i]) || p.hysteresis[i] < 0.0)
      err(indexed("h", i), "hysteresis half-width must be nonnegative");
    else if (std::isfinite(p.threshold[i]) && p.threshold[i] - p.hysteresis[i] <= 0.0)
      err(indexed("th", i), "lower hysteresis edge must stay positive");
  }
  // Soft structural check: the expression window for x2 requires the
  // MT1-MMP trigger band to close below the inhibition band.
  if (issues.empty() && p.threshold[0] + p.hysteresis[0] >= p.threshold[2] - p.hysteresis[2]) {
    issues.push_back({IssueSeverity::Warning, "th1",
                      "th1 + h1 >= th3 - h3: x2 can never be expressed"});
  }
  return issues;
}

bool params_valid(const NetworkParams& p) {
  auto issues = validate_params(p);
  return std::none_of(issues.begin(), issues.end(), [](const ParamIssue& v) {
    return v.severity == IssueSeverity::Error;
  });
}

double affine_state_after(const AffineFlow& f, double x0, double dt) {
  if (dt <= 0.0) return x0;
  return f.target + (x0 - f.target) * std::exp(-f.rate * dt);
}

HybridState ArcSegment::state_at(double t) const {
  if (t <= begin.t) return state0;
  if (t >= end.t) return state1;
  HybridState z = state0;
  const double dt = t - begin.t;
  for (int i = 0; i < 3; ++i) z.x[i] = affine_state_after(flow[i], state0.x[i], dt);
  return z;
}

std::vector<JumpRecord> HybridArc::jumps() const {
  std::vector<JumpRecord> out;
  for (std::size_t n = 0; n + 1 < segments.size(); ++n) {
    const ArcSegment& seg = segments[n];
    if (!seg.jump_cause) continue;
    out.push_back({seg.end.t, seg.end.j + 1, *seg.jump_cause, seg.state1,
                   segments[n + 1].state0});
  }
  return out;
}

HybridState HybridArc::state_at(double t) const {
  if (segments.empty()) throw std::logic_error("empty arc");
  // Latest segment whose span contains t, so a query at a jump instant
  // lands after the whole chain of flips taken there.
  const ArcSegment* hit = nullptr;
  for (const ArcSegment& seg : segments) {
    if (seg.begin.t > t) break;
    if (t <= seg.end.t) hit = &seg;
  }
  if (hit == nullptr) return segments.back().state1;
  return hit->state_at(t);
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::EquilibriumReached: return "equilibrium";
    case VerdictKind::LimitCycle: return "limit-cycle";
    case VerdictKind::ZenoSuspected: return "zeno-suspected";
    case VerdictKind::HorizonExhausted: return "horizon-exhausted";
  }
  return "unknown";
}

}  // namespace sclera
