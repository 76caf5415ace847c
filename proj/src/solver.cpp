#include "sclera/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sclera {

namespace {

void check_config(const SolverConfig& cfg) {
  if (!(cfg.t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (cfg.j_max < 1) throw std::invalid_argument("j_max must be at least 1");
  if (!(cfg.zeno_span > 0.0)) throw std::invalid_argument("zeno_span must be positive");
  if (cfg.zeno_jumps < 2) throw std::invalid_argument("zeno_jumps must be at least 2");
}

void check_params(const NetworkParams& p) {
  if (!params_valid(p)) throw std::invalid_argument("invalid network parameters");
}

/// Trailing-window Zeno test over the recorded jump times.
bool zeno_fired(const std::vector<double>& jump_times, const SolverConfig& cfg) {
  const std::size_t n = jump_times.size();
  const std::size_t w = static_cast<std::size_t>(cfg.zeno_jumps);
  if (n < w) return false;
  return jump_times.back() - jump_times[n - w] <= cfg.zeno_span;
}

HybridState advance(const HybridState& z, const std::array<AffineFlow, 3>& flow, double dt) {
  HybridState out = z;
  for (int i = 0; i < 3; ++i) out.x[i] = affine_state_after(flow[i], z.x[i], dt);
  return out;
}

/// Records a jump into the segment list: stamps the cause onto the segment
/// that just ended here, or emits a zero-length segment when the jump chains
/// directly after another jump (or fires at t = 0).
void record_jump(std::vector<ArcSegment>& segments, const HybridTime& now,
                 const HybridState& pre, int cause, const NetworkParams& p) {
  if (!segments.empty() && !segments.back().jump_cause &&
      segments.back().end == now && segments.back().state1 == pre) {
    segments.back().jump_cause = cause;
    return;
  }
  ArcSegment seg;
  seg.begin = now;
  seg.end = now;
  seg.state0 = pre;
  seg.state1 = pre;
  seg.flow = mode_target(pre.q, p).flow;
  seg.jump_cause = cause;
  segments.push_back(seg);
}

void append_terminal(std::vector<ArcSegment>& segments, const HybridTime& now,
                     const HybridState& z, const NetworkParams& p) {
  // The arc must end with a causeless segment; emit a zero-length one when
  // the run stopped right after a jump.
  if (!segments.empty() && !segments.back().jump_cause) return;
  ArcSegment seg;
  seg.begin = now;
  seg.end = now;
  seg.state0 = z;
  seg.state1 = z;
  seg.flow = mode_target(z.q, p).flow;
  segments.push_back(seg);
}

TrajectoryVerdict make_verdict(StopReason stop, const HybridArc& arc,
                               const NetworkParams& p,
                               const std::array<std::int64_t, 4>& by_family,
                               std::int64_t total) {
  TrajectoryVerdict v;
  v.jumps_by_family = by_family;
  v.total_jumps = total;
  switch (stop) {
    case StopReason::Equilibrium: {
      v.kind = VerdictKind::EquilibriumReached;
      const HybridState& z = arc.segments.back().state0;
      const ModeDescriptor mode = mode_target(z.q, p);
      EquilibriumPoint eq;
      eq.q_final = z.q;
      for (int i = 0; i < 3; ++i) eq.x_star[i] = mode.flow[i].target;
      v.equilibrium = eq;
      break;
    }
    case StopReason::ZenoWindow:
      v.kind = VerdictKind::ZenoSuspected;
      break;
    case StopReason::Horizon:
    case StopReason::JumpBudget:
      v.kind = VerdictKind::HorizonExhausted;
      break;
  }
  return v;
}

}  // namespace

std::optional<double> crossing_time(double x0, double target, double rate, double level) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  if (x0 == level) return std::nullopt;
  const double from = x0 - target;
  const double to = level - target;
  // Reachable only when the level sits strictly between the start and the
  // asymptote: same side of the target, smaller gap.
  if (!((from > 0.0 && to > 0.0) || (from < 0.0 && to < 0.0))) return std::nullopt;
  if (!(std::abs(to) < std::abs(from))) return std::nullopt;
  return std::log(from / to) / rate;
}

SolveResult simulate(const HybridState& z0, const NetworkParams& p, const SolverConfig& cfg) {
  check_config(cfg);
  check_params(p);

  HybridArc arc;
  JumpSelector selector(cfg.policy, cfg.seed);
  std::vector<double> jump_times;
  std::array<std::int64_t, 4> by_family{0, 0, 0, 0};
  HybridState z = z0;
  double t = 0.0;
  std::int64_t j = 0;
  std::optional<StopReason> stop;

  while (!stop) {
    const std::vector<int> active = jump_set_membership(z, p);
    if (!active.empty()) {
      if (j >= cfg.j_max) {
        stop = zeno_fired(jump_times, cfg) ? StopReason::ZenoWindow : StopReason::JumpBudget;
        break;
      }
      const int cause = selector.pick(active);
      record_jump(arc.segments, {t, j}, z, cause, p);
      z = apply_flip(z, cause);
      ++j;
      ++by_family[cause - 1];
      jump_times.push_back(t);
      if (zeno_fired(jump_times, cfg)) stop = StopReason::ZenoWindow;
      continue;
    }

    const ModeDescriptor mode = mode_target(z.q, p);
    const double remaining = cfg.t_max - t;

    std::optional<double> tau;
    int next_family = 0;
    for (int family = 1; family <= 4; ++family) {
      const int w = watched_coordinate(family);
      const double level = active_edge(family, z.q[family - 1], p);
      const auto candidate = crossing_time(z.x[w], mode.flow[w].target, mode.flow[w].rate, level);
      if (candidate && (!tau || *candidate < *tau)) {
        tau = candidate;
        next_family = family;
      }
    }

    if (!tau || *tau >= remaining) {
      // Flow out the rest of the horizon. With no reachable surface at all
      // the limit point is the mode target; keep the terminal segment so
      // the approach remains sampleable.
      ArcSegment seg;
      seg.begin = {t, j};
      seg.end = {cfg.t_max, j};
      seg.state0 = z;
      seg.state1 = advance(z, mode.flow, remaining);
      seg.flow = mode.flow;
      arc.segments.push_back(seg);
      stop = tau ? StopReason::Horizon : StopReason::Equilibrium;
      break;
    }

    HybridState z1 = advance(z, mode.flow, *tau);
    // Land exactly on the edge so the membership test fires by equality.
    z1.x[watched_coordinate(next_family)] = active_edge(next_family, z.q[next_family - 1], p);
    ArcSegment seg;
    seg.begin = {t, j};
    seg.end = {t + *tau, j};
    seg.state0 = z;
    seg.state1 = z1;
    seg.flow = mode.flow;
    arc.segments.push_back(seg);
    z = z1;
    t += *tau;
  }

  append_terminal(arc.segments, {t, j}, z, p);
  arc.stop = *stop;
  return {arc, make_verdict(*stop, arc, p, by_family, j)};
}

OracleRun simulate_oracle(const HybridState& z0, const NetworkParams& p,
                          const SolverConfig& cfg, const OracleConfig& ocfg,
                          std::span<const double> wanted_times) {
  check_config(cfg);
  check_params(p);
  if (!(ocfg.dt > 0.0)) throw std::invalid_argument("oracle dt must be positive");
  if (ocfg.interp_order != 0 && ocfg.interp_order != 1)
    throw std::invalid_argument("interp_order must be 0 or 1");
  for (double g : p.decay)
    if (ocfg.dt * g >= 1.0)
      throw std::invalid_argument("oracle dt too large for explicit Euler at this decay rate");

  OracleRun run;
  JumpSelector selector(cfg.policy, cfg.seed);
  std::vector<double> jump_times;
  HybridState z = z0;
  double t = 0.0;
  std::int64_t j = 0;
  std::optional<StopReason> stop;

  // Open flow-segment bookkeeping.
  HybridTime seg_begin{0.0, 0};
  HybridState seg_state0 = z0;
  bool seg_open = false;

  std::size_t cursor = 0;
  while (cursor < wanted_times.size() && wanted_times[cursor] <= 0.0) {
    run.sample_times.push_back(wanted_times[cursor]);
    run.samples.push_back(z0);
    ++cursor;
  }
  auto record_samples = [&](double t_prev, const HybridState& z_prev, double t_next,
                            const HybridState& z_next) {
    while (cursor < wanted_times.size() && wanted_times[cursor] <= t_next) {
      const double w = wanted_times[cursor];
      const double lambda = (w - t_prev) / (t_next - t_prev);
      HybridState s = z_next;
      for (int i = 0; i < 3; ++i)
        s.x[i] = z_prev.x[i] + lambda * (z_next.x[i] - z_prev.x[i]);
      run.sample_times.push_back(w);
      run.samples.push_back(s);
      ++cursor;
    }
  };
  auto close_segment = [&](std::optional<int> cause) {
    ArcSegment seg;
    seg.begin = seg_begin;
    seg.end = {t, j};
    seg.state0 = seg_state0;
    seg.state1 = z;
    seg.flow = mode_target(seg_state0.q, p).flow;
    seg.jump_cause = cause;
    run.arc.segments.push_back(seg);
    seg_open = false;
  };

  while (!stop) {
    const std::vector<int> active = jump_set_membership(z, p);
    if (!active.empty()) {
      if (j >= cfg.j_max) {
        stop = zeno_fired(jump_times, cfg) ? StopReason::ZenoWindow : StopReason::JumpBudget;
        break;
      }
      const int cause = selector.pick(active);
      if (seg_open) {
        close_segment(cause);
      } else {
        record_jump(run.arc.segments, {t, j}, z, cause, p);
      }
      z = apply_flip(z, cause);
      ++j;
      jump_times.push_back(t);
      if (zeno_fired(jump_times, cfg)) stop = StopReason::ZenoWindow;
      seg_begin = {t, j};
      seg_state0 = z;
      continue;
    }

    if (t >= cfg.t_max) {
      stop = StopReason::Horizon;
      break;
    }
    if (!seg_open) {
      seg_open = true;
      seg_begin = {t, j};
      seg_state0 = z;
    }

    const double dt_eff = std::min(ocfg.dt, cfg.t_max - t);
    if (!(dt_eff > 0.0) || t + dt_eff == t) {
      // Remaining horizon below time resolution.
      stop = StopReason::Horizon;
      break;
    }
    const std::array<double, 3> v = flow_map(z, p);
    HybridState znext = z;
    for (int i = 0; i < 3; ++i) znext.x[i] = z.x[i] + dt_eff * v[i];
    double t_next = t + dt_eff;

    if (ocfg.interp_order == 1) {
      const std::vector<int> hit = jump_set_membership(znext, p);
      if (!hit.empty()) {
        // Localize the earliest new crossing linearly inside the step and
        // put the watched coordinate exactly on its edge.
        double best_lambda = 2.0;
        int best_family = 0;
        for (int family : hit) {
          const int w = watched_coordinate(family);
          const double edge = active_edge(family, z.q[family - 1], p);
          const double denom = znext.x[w] - z.x[w];
          if (denom == 0.0) continue;  // was already at the edge; kept by membership
          const double lambda = (edge - z.x[w]) / denom;
          if (lambda >= 0.0 && lambda < best_lambda) {
            best_lambda = lambda;
            best_family = family;
          }
        }
        if (best_family != 0 && best_lambda <= 1.0) {
          HybridState zc = z;
          for (int i = 0; i < 3; ++i)
            zc.x[i] = z.x[i] + best_lambda * (znext.x[i] - z.x[i]);
          zc.x[watched_coordinate(best_family)] =
              active_edge(best_family, z.q[best_family - 1], p);
          znext = zc;
          t_next = t + best_lambda * dt_eff;
        }
      }
    }

    record_samples(t, z, t_next, znext);
    z = znext;
    t = t_next;
  }

  if (seg_open) close_segment(std::nullopt);
  append_terminal(run.arc.segments, {t, j}, z, p);
  run.arc.stop = *stop;
  return run;
}

}  // namespace sclera
