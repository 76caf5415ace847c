#include "sclera/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace sclera {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void expect_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known) fail(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  return v.get<double>();
}

template <std::size_t N>
std::array<double, N> as_number_array(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N)
    fail(where + " must be an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = as_number(v[i], where);
  return out;
}

std::array<bool, 4> as_latch_array(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) fail(where + " must be an array of 4 values in {0, 1}");
  std::array<bool, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const json& e = v[i];
    if (e.is_boolean()) {
      out[i] = e.get<bool>();
    } else if (e.is_number_integer() &&
               (e.get<std::int64_t>() == 0 || e.get<std::int64_t>() == 1)) {
      out[i] = e.get<std::int64_t>() == 1;
    } else {
      fail(where + " entries must be 0, 1 or booleans");
    }
  }
  return out;
}

JumpPolicy parse_policy(const std::string& s) {
  if (s == "lowest_index") return JumpPolicy::LowestIndex;
  if (s == "seeded_random") return JumpPolicy::SeededRandom;
  fail("solver.policy must be 'lowest_index' or 'seeded_random'");
}

const char* policy_name(JumpPolicy p) {
  return p == JumpPolicy::LowestIndex ? "lowest_index" : "seeded_random";
}

int parse_plot_axis(const json& v) {
  const std::string s = v.is_string() ? v.get<std::string>() : "";
  if (s == "x1") return 0;
  if (s == "x2") return 1;
  if (s == "x3") return 2;
  fail("output.plot_axes entries must be 'x1', 'x2' or 'x3'");
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  expect_keys(root, "top level",
              {"schema_version", "name", "params", "initial", "solver", "analysis", "output",
               "axes"});

  ScenarioConfig c;
  if (!root.contains("schema_version") || !root["schema_version"].is_number_integer())
    fail("schema_version is required and must be an integer");
  c.schema_version = root["schema_version"].get<int>();
  if (c.schema_version != 1) fail("unsupported schema_version (expected 1)");

  if (root.contains("name")) {
    if (!root["name"].is_string()) fail("name must be a string");
    c.name = root["name"].get<std::string>();
  }

  if (root.contains("params")) {
    const json& p = root["params"];
    if (!p.is_object()) fail("params must be an object");
    expect_keys(p, "params", {"k", "g", "th", "h"});
    if (p.contains("k")) c.params.growth = as_number_array<3>(p["k"], "params.k");
    if (p.contains("g")) c.params.decay = as_number_array<3>(p["g"], "params.g");
    if (p.contains("th")) c.params.threshold = as_number_array<4>(p["th"], "params.th");
    if (p.contains("h")) c.params.hysteresis = as_number_array<4>(p["h"], "params.h");
  }

  if (!root.contains("initial")) fail("initial is required");
  {
    const json& s0 = root["initial"];
    if (!s0.is_object()) fail("initial must be an object");
    expect_keys(s0, "initial", {"x", "q"});
    if (!s0.contains("x") || !s0.contains("q")) fail("initial requires 'x' and 'q'");
    c.initial_x = as_number_array<3>(s0["x"], "initial.x");
    c.initial_q = as_latch_array(s0["q"], "initial.q");
  }

  if (root.contains("solver")) {
    const json& s = root["solver"];
    if (!s.is_object()) fail("solver must be an object");
    expect_keys(s, "solver", {"t_max", "j_max", "zeno_jumps", "zeno_span", "policy", "seed"});
    if (s.contains("t_max")) c.solver.t_max = as_number(s["t_max"], "solver.t_max");
    if (s.contains("j_max")) {
      if (!s["j_max"].is_number_integer()) fail("solver.j_max must be an integer");
      c.solver.j_max = s["j_max"].get<std::int64_t>();
    }
    if (s.contains("zeno_jumps")) {
      if (!s["zeno_jumps"].is_number_integer()) fail("solver.zeno_jumps must be an integer");
      c.solver.zeno_jumps = s["zeno_jumps"].get<int>();
    }
    if (s.contains("zeno_span")) c.solver.zeno_span = as_number(s["zeno_span"], "solver.zeno_span");
    if (s.contains("policy")) {
      if (!s["policy"].is_string()) fail("solver.policy must be a string");
      c.solver.policy = parse_policy(s["policy"].get<std::string>());
    }
    if (s.contains("seed")) {
      if (!s["seed"].is_number_integer()) fail("solver.seed must be an integer");
      c.solver.seed = s["seed"].get<std::uint64_t>();
    }
  }

  if (root.contains("analysis")) {
    const json& a = root["analysis"];
    if (!a.is_object()) fail("analysis must be an object");
    expect_keys(a, "analysis", {"cycle_tol"});
    if (a.contains("cycle_tol")) c.cycle_tol = as_number(a["cycle_tol"], "analysis.cycle_tol");
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    if (!o.is_object()) fail("output must be an object");
    expect_keys(o, "output", {"sample_spacing", "dir", "plot", "plot_axes"});
    if (o.contains("sample_spacing"))
      c.output.sample_spacing = as_number(o["sample_spacing"], "output.sample_spacing");
    if (o.contains("dir")) {
      if (!o["dir"].is_string()) fail("output.dir must be a string");
      c.output.dir = o["dir"].get<std::string>();
    }
    if (o.contains("plot")) {
      if (!o["plot"].is_string()) fail("output.plot must be a string");
      c.output.plot = o["plot"].get<std::string>();
      if (c.output.plot != "off" && c.output.plot != "2d" && c.output.plot != "3d")
        fail("output.plot must be 'off', '2d' or '3d'");
    }
    if (o.contains("plot_axes")) {
      const json& ax = o["plot_axes"];
      if (!ax.is_array() || ax.size() != 2) fail("output.plot_axes must be a 2-element array");
      c.output.plot_axes = {parse_plot_axis(ax[0]), parse_plot_axis(ax[1])};
    }
  }

  if (root.contains("axes")) {
    const json& axes = root["axes"];
    if (!axes.is_array()) fail("axes must be an array");
    for (const json& a : axes) {
      if (!a.is_object()) fail("axes entries must be objects");
      expect_keys(a, "axes entry", {"param", "from", "to", "steps"});
      SweepAxis axis;
      if (!a.contains("param") || !a["param"].is_string())
        fail("axes entries require a string 'param'");
      axis.param = a["param"].get<std::string>();
      if (!a.contains("from") || !a.contains("to") || !a.contains("steps"))
        fail("axes entries require 'from', 'to' and 'steps'");
      axis.from = as_number(a["from"], "axes.from");
      axis.to = as_number(a["to"], "axes.to");
      if (!a["steps"].is_number_integer()) fail("axes.steps must be an integer");
      axis.steps = a["steps"].get<int>();
      c.axes.push_back(axis);
    }
  }

  return c;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ScenarioConfig c = parse_scenario(buf.str());
  if (c.name.empty()) {
    // Derive a name from the file stem for artifact naming.
    std::string stem = path;
    if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
      stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
      stem = stem.substr(0, dot);
    c.name = stem;
  }
  return c;
}

std::string serialize_scenario(const ScenarioConfig& c) {
  static const char* axis_name[3] = {"x1", "x2", "x3"};
  json root;
  root["schema_version"] = c.schema_version;
  root["name"] = c.name;
  root["params"] = {{"k", c.params.growth},
                    {"g", c.params.decay},
                    {"th", c.params.threshold},
                    {"h", c.params.hysteresis}};
  json q = json::array();
  for (bool b : c.initial_q) q.push_back(b ? 1 : 0);
  root["initial"] = {{"x", c.initial_x}, {"q", q}};
  root["solver"] = {{"t_max", c.solver.t_max},
                    {"j_max", c.solver.j_max},
                    {"zeno_jumps", c.solver.zeno_jumps},
                    {"zeno_span", c.solver.zeno_span},
                    {"policy", policy_name(c.solver.policy)},
                    {"seed", c.solver.seed}};
  root["analysis"] = {{"cycle_tol", c.cycle_tol}};
  root["output"] = {{"sample_spacing", c.output.sample_spacing},
                    {"dir", c.output.dir},
                    {"plot", c.output.plot},
                    {"plot_axes",
                     {axis_name[c.output.plot_axes[0]], axis_name[c.output.plot_axes[1]]}}};
  if (!c.axes.empty()) {
    json axes = json::array();
    for (const SweepAxis& a : c.axes)
      axes.push_back(
          {{"param", a.param}, {"from", a.from}, {"to", a.to}, {"steps", a.steps}});
    root["axes"] = axes;
  }
  return root.dump(2) + "\n";
}

std::vector<ParamIssue> validate_scenario(const ScenarioConfig& c) {
  std::vector<ParamIssue> issues = validate_params(c.params);
  auto err = [&issues](std::string field, std::string msg) {
    issues.push_back({IssueSeverity::Error, std::move(field), std::move(msg)});
  };
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(c.initial_x[i]) || c.initial_x[i] < 0.0)
      err("initial.x" + std::to_string(i + 1), "concentration must be nonnegative");
  }
  if (!(c.solver.t_max > 0.0)) err("solver.t_max", "must be positive");
  if (c.solver.j_max < 1) err("solver.j_max", "must be at least 1");
  if (c.solver.zeno_jumps < 2) err("solver.zeno_jumps", "must be at least 2");
  if (!(c.solver.zeno_span > 0.0)) err("solver.zeno_span", "must be positive");
  if (!(c.cycle_tol > 0.0)) err("analysis.cycle_tol", "must be positive");
  if (!(c.output.sample_spacing > 0.0)) err("output.sample_spacing", "must be positive");
  for (const SweepAxis& a : c.axes) {
    if (a.steps < 1) {
      err("axes." + a.param, "steps must be >= 1");
      continue;
    }
    try {
      NetworkParams probe = c.params;
      apply_axis_value(probe, a.param, a.from);
    } catch (const std::invalid_argument& e) {
      err("axes." + a.param, e.what());
    }
  }
  return issues;
}

namespace {

ScenarioConfig base_figure_preset() {
  ScenarioConfig c;
  c.params.growth = {1.0, 1.0, 1.0};
  c.params.decay = {1.0, 1.0, 1.0};
  c.params.threshold = {0.4, 0.5, 0.6, 0.7};
  c.params.hysteresis = {0.01, 0.01, 0.01, 0.01};
  c.initial_q = {true, true, false, true};
  return c;
}

}  // namespace

ScenarioConfig preset_scenario(const std::string& id) {
  ScenarioConfig c = base_figure_preset();
  if (id == "s1") {
    c.name = "fig-s1";
    c.initial_x = {0.15, 0.45, 0.8};
  } else if (id == "s3") {
    c.name = "fig-s3";
    c.params.growth = {0.55, 1.0, 0.9};
    c.initial_x = {0.45, 0.6, 0.8};
  } else if (id == "s5") {
    c.name = "fig-s5";
    c.initial_x = {0.45, 0.45, 0.8};
  } else if (id == "s7") {
    c.name = "fig-s7";
    c.params.hysteresis = {0.0, 0.0, 0.0, 0.0};
    c.initial_x = {0.45, 0.45, 0.8};
  } else {
    throw std::invalid_argument("unknown preset '" + id + "' (known: s1, s3, s5, s7)");
  }
  return c;
}

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{"s1", "s3", "s5", "s7"};
  return ids;
}

}  // namespace sclera
