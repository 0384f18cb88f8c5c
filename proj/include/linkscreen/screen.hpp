#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linkscreen/geometry.hpp"
#include "linkscreen/kinematics.hpp"

namespace linkscreen {

struct RenderSpec {
    int resolution = 512;     // samples per axis
    bool normalized = false;  // map into the unit square before emitting
    bool include_ridge = true;
};

using PointList = std::vector<std::array<double, 2>>;

// Sampled screen: caustic branches over the x band, ridge curves, gate
// points and any gate coalescences, plus the trace overlay when present.
struct ScreenGeometry {
    QuadSides sides;
    ScreenBounds bounds;
    PointList caustic_upper, caustic_lower;
    PointList ridge_y_curve;   // (x, ridge_y(x)) over the x band
    PointList ridge_x_curve;   // (ridge_x(y), y) over the y band
    Gates gate_values;
    PointList gate_points;     // N, S, E, W (+ secondary contacts)
    std::vector<std::string> gate_labels;  // parallel to gate_points
    std::vector<std::string> coalescences; // e.g. "N=W", sorted
    PointList trace;           // optional overlay, path order
    bool piero_line = false;   // x<->y exchange symmetry (a=c or b=d)
    bool normalized = false;
    bool square_ok = true;     // Eq-square held when normalizing
};

ScreenGeometry build_screen(const QuadSides& q, const RenderSpec& spec = {});

// Attach a traced cycle as an overlay (diagonal pairs in path order).
void attach_trace(ScreenGeometry& g, const TraceReport& trace);

// curve,x,y rows (plus square_ok flag column when normalized); curves in
// the fixed order caustic_upper, caustic_lower, ridge_x, ridge_y,
// gate_N/S/E/W, trace. 12 significant digits, deterministic bytes.
void emit_csv(const ScreenGeometry& g, std::ostream& out);

// Inverse of emit_csv for round-tripping sampled curves.
ScreenGeometry parse_csv(std::istream& in);

// Self-contained SVG: axes with the band rectangle, caustic loop, dashed
// ridges, labeled gates, coalescence annotations, the x=y exchange line
// when present, and the trace overlay.
void emit_svg(const ScreenGeometry& g, std::ostream& out);

// JSON with the ScreenGeometry field names; "schema": 1.
std::string screen_json(const ScreenGeometry& g);

std::string format_g12(double v);  // %.12g, shared by all emitters

}  // namespace linkscreen
