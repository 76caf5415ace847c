#ifndef SCLERA_REPORT_HPP_
#define SCLERA_REPORT_HPP_

#include <string>

#include "sclera/analysis.hpp"
#include "sclera/core.hpp"
#include "sclera/scenario.hpp"

/// Artifact rendering: plain delimited tables and a dependency-free SVG
/// phase portrait. All renderers are deterministic string producers.
namespace sclera {

/// Dense time series (header row; columns t, j, x1, x2, x3, q1..q4).
/// Rows at every multiple of `spacing` inside the arc plus, for each jump,
/// one pre-jump and one post-jump row sharing t and x and differing in the
/// flipped latch column.
std::string render_timeseries_csv(const HybridArc& arc, double spacing);

/// Jump-event log: t, j, flipped family, latches before and after
/// (as 4-character bit strings).
std::string render_jump_log_csv(const HybridArc& arc);

/// Human-readable run summary: scenario, parameters, verdict, diagnostics.
std::string render_summary(const ScenarioConfig& config, const SolveResult& result);

/// Sweep table: one row per cell with axis values, verdict kind and the
/// cell summary (equilibrium point and class, or cycle period).
std::string render_sweep_csv(const SweepGrid& grid);

/// Vector phase portrait of the concentration trajectory: 2d projection of
/// two coordinates, or a fixed orthographic 3d projection. The initial
/// point is marked with an asterisk.
std::string render_phase_svg(const HybridArc& arc, const ScenarioConfig& config);

}  // namespace sclera

#endif  // SCLERA_REPORT_HPP_
