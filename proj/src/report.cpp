#include "sclera/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sclera {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string latch_bits(const std::array<bool, 4>& q) {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = q[i] ? '1' : '0';
  return s;
}

void append_row(std::string& out, double t, std::int64_t j, const HybridState& z) {
  out += num(t);
  out += ',';
  out += std::to_string(j);
  for (int i = 0; i < 3; ++i) {
    out += ',';
    out += num(z.x[i]);
  }
  for (int i = 0; i < 4; ++i) {
    out += ',';
    out += z.q[i] ? '1' : '0';
  }
  out += '\n';
}

}  // namespace

std::string render_timeseries_csv(const HybridArc& arc, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("sample spacing must be positive");
  std::string out = "t,j,x1,x2,x3,q1,q2,q3,q4\n";
  const auto& segments = arc.segments;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const ArcSegment& seg = segments[s];
    // The start row is covered by the pre-jump row when the run opens with
    // an immediate jump.
    if (s == 0 && !(seg.jump_cause && seg.duration() == 0.0))
      append_row(out, seg.begin.t, seg.begin.j, seg.state0);
    if (seg.duration() > 0.0) {
      // Grid points strictly inside the segment; boundary rows are emitted
      // separately so jump instants keep their exact pre/post pairing.
      std::int64_t m = static_cast<std::int64_t>(std::floor(seg.begin.t / spacing)) + 1;
      for (; m * spacing < seg.end.t; ++m) {
        const double t = m * spacing;
        if (t <= seg.begin.t) continue;
        append_row(out, t, seg.begin.j, seg.state_at(t));
      }
    }
    if (seg.jump_cause) {
      append_row(out, seg.end.t, seg.end.j, seg.state1);
      append_row(out, seg.end.t, seg.end.j + 1, segments[s + 1].state0);
    } else if (seg.duration() > 0.0 || segments.size() == 1) {
      append_row(out, seg.end.t, seg.end.j, seg.state1);
    }
  }
  return out;
}

std::string render_jump_log_csv(const HybridArc& arc) {
  std::string out = "t,j,family,q_pre,q_post\n";
  for (const JumpRecord& jump : arc.jumps()) {
    out += num(jump.t);
    out += ',';
    out += std::to_string(jump.j_after);
    out += ',';
    out += std::to_string(jump.cause);
    out += ',';
    out += latch_bits(jump.pre.q);
    out += ',';
    out += latch_bits(jump.post.q);
    out += '\n';
  }
  return out;
}

std::string render_summary(const ScenarioConfig& config, const SolveResult& result) {
  const TrajectoryVerdict& v = result.verdict;
  std::ostringstream os;
  os << "scenario: " << config.name << "\n";
  os << "params: k=(" << num(config.params.growth[0]) << ", " << num(config.params.growth[1])
     << ", " << num(config.params.growth[2]) << ") g=(" << num(config.params.decay[0]) << ", "
     << num(config.params.decay[1]) << ", " << num(config.params.decay[2]) << ")\n";
  os << "        th=(" << num(config.params.threshold[0]) << ", "
     << num(config.params.threshold[1]) << ", " << num(config.params.threshold[2]) << ", "
     << num(config.params.threshold[3]) << ") h=(" << num(config.params.hysteresis[0]) << ", "
     << num(config.params.hysteresis[1]) << ", " << num(config.params.hysteresis[2]) << ", "
     << num(config.params.hysteresis[3]) << ")\n";
  os << "initial: x=(" << num(config.initial_x[0]) << ", " << num(config.initial_x[1]) << ", "
     << num(config.initial_x[2]) << ") q=" << latch_bits(config.initial_q) << "\n";
  os << "span: t=" << num(result.arc.end_time()) << " jumps=" << v.total_jumps
     << " (per family: " << v.jumps_by_family[0] << "/" << v.jumps_by_family[1] << "/"
     << v.jumps_by_family[2] << "/" << v.jumps_by_family[3] << ")\n";
  os << "verdict: " << to_string(v.kind) << "\n";
  switch (v.kind) {
    case VerdictKind::EquilibriumReached: {
      const EquilibriumPoint& eq = *v.equilibrium;
      EquilibriumClass cls = classify_equilibrium(v, config.params);
      std::string label = std::string(to_string(cls));
      label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
      os << label << " equilibrium (" << num(eq.x_star[0]) << ", " << num(eq.x_star[1]) << ", "
         << num(eq.x_star[2]) << "), final q=" << latch_bits(eq.q_final) << "\n";
      break;
    }
    case VerdictKind::LimitCycle: {
      const CycleReport& c = *v.cycle;
      os << "LimitCycle: period " << num(c.period) << ", " << c.jumps_per_period
         << " jumps per period, residual " << num(c.residual) << "\n";
      break;
    }
    case VerdictKind::ZenoSuspected:
      os << "ZenoSuspected: jump accumulation at t=" << num(result.arc.end_time())
         << "; solution not continuable under jump-priority semantics\n";
      break;
    case VerdictKind::HorizonExhausted:
      os << "HorizonExhausted: no equilibrium or qualifying recurrence within budget\n";
      break;
  }
  return os.str();
}

std::string render_sweep_csv(const SweepGrid& grid) {
  std::string out;
  for (const SweepAxis& axis : grid.axes) {
    out += axis.param;
    out += ',';
  }
  out += "verdict,class,x1_star,x2_star,x3_star,period,error\n";
  for (const SweepCell& cell : grid.cells) {
    for (double v : cell.values) {
      out += num(v);
      out += ',';
    }
    if (!cell.error.empty()) {
      std::string msg = cell.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out += "error,,,,,," + msg + "\n";
      continue;
    }
    out += to_string(cell.kind);
    out += ',';
    out += cell.equilibrium_class ? to_string(*cell.equilibrium_class) : "";
    for (int i = 0; i < 3; ++i) {
      out += ',';
      if (cell.x_star) out += num((*cell.x_star)[i]);
    }
    out += ',';
    if (cell.period) out += num(*cell.period);
    out += ",\n";
  }
  return out;
}

namespace {

struct Projector {
  bool three_d;
  std::array<int, 2> axes2d;

  std::pair<double, double> operator()(const std::array<double, 3>& x) const {
    if (!three_d) return {x[axes2d[0]], x[axes2d[1]]};
    // Fixed orthographic projection: u spreads x1 against x2, v lifts x3.
    const double c = 0.866025403784438647, s = 0.5;
    return {(x[0] - x[1]) * c, x[2] + (x[0] + x[1]) * s};
  }
};

}  // namespace

std::string render_phase_svg(const HybridArc& arc, const ScenarioConfig& config) {
  const bool three_d = config.output.plot != "2d";
  const Projector proj{three_d, config.output.plot_axes};

  // Sample the trajectory (segment endpoints plus a dense within-segment
  // grid so the curved flow renders smoothly).
  std::vector<std::pair<double, double>> pts;
  for (const ArcSegment& seg : arc.segments) {
    pts.push_back(proj(seg.state0.x));
    const double len = seg.duration();
    if (len > 0.0) {
      const int n = std::min(64, std::max(4, static_cast<int>(len / 0.02)));
      for (int i = 1; i < n; ++i)
        pts.push_back(proj(seg.state_at(seg.begin.t + len * i / n).x));
    }
    pts.push_back(proj(seg.state1.x));
  }

  double umin = pts.front().first, umax = umin, vmin = pts.front().second, vmax = vmin;
  for (const auto& [u, v] : pts) {
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double du = std::max(umax - umin, 1e-9), dv = std::max(vmax - vmin, 1e-9);
  const double W = 720.0, H = 540.0, margin = 60.0;
  auto sx = [&](double u) { return margin + (u - umin) / du * (W - 2 * margin); };
  auto sy = [&](double v) { return H - margin - (v - vmin) / dv * (H - 2 * margin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  static const char* coord_name[3] = {"x1", "x2", "x3"};
  std::string axis_label = three_d ? "orthographic x1,x2,x3"
                                   : std::string(coord_name[config.output.plot_axes[0]]) +
                                         " vs " + coord_name[config.output.plot_axes[1]];
  os << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
     << config.name << " phase portrait (" << axis_label << ")</text>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.2\" points=\"";
  for (const auto& [u, v] : pts) os << num(sx(u)) << "," << num(sy(v)) << " ";
  os << "\"/>\n";

  // Initial point marker: a six-spoke asterisk.
  const auto [u0, v0] = pts.front();
  const double cx = sx(u0), cy = sy(v0), r = 7.0;
  os << "<g stroke=\"#c23b21\" stroke-width=\"1.6\">\n";
  for (int k = 0; k < 3; ++k) {
    const double a = k * M_PI / 3.0;
    os << "<line x1=\"" << num(cx - r * std::cos(a)) << "\" y1=\"" << num(cy - r * std::sin(a))
       << "\" x2=\"" << num(cx + r * std::cos(a)) << "\" y2=\"" << num(cy + r * std::sin(a))
       << "\"/>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << margin << "\" y=\"" << H - 24
     << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c23b21\">* initial point"
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace sclera
