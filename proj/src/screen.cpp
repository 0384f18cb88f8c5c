#include "linkscreen/screen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "linkscreen/errors.hpp"

namespace linkscreen {

std::string format_g12(double v) {
    if (v == 0) v = 0;  // normalize -0
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

double quant12(double v) {
    std::string s = format_g12(v);
    return std::strtod(s.c_str(), nullptr);
}

DiagonalPair map_point(const QuadSides& q, double x, double y, bool normalized) {
    if (!normalized) return {x, y};
    return {(x - (q.b - q.a)) / (2 * q.a), (y - (q.d - q.a)) / (2 * q.a)};
}

constexpr double kCoalesceTol = 1e-6;

}  // namespace

ScreenGeometry build_screen(const QuadSides& q, const RenderSpec& spec) {
    if (spec.resolution < 2)
        throw input_error("resolution must be at least 2");

    ScreenGeometry g;
    g.sides = q;
    g.bounds = screen_bounds(q);
    g.gate_values = gates(q);
    g.normalized = spec.normalized;
    g.square_ok = g.bounds.square_assumption_holds;

    double s = (q.a + q.b + q.c + q.d) / 2;
    g.piero_line = std::fabs(q.a - q.c) <= 1e-12 * s || std::fabs(q.b - q.d) <= 1e-12 * s;

    int N = spec.resolution;
    auto mp = [&](double x, double y) {
        DiagonalPair p = map_point(q, x, y, spec.normalized);
        return std::array<double, 2>{p.x, p.y};
    };

    for (int i = 0; i < N; ++i) {
        double x = g.bounds.x_min + (g.bounds.x_max - g.bounds.x_min) * i / (N - 1);
        auto ys = caustic_y(q, x);
        g.caustic_lower.push_back(mp(x, ys[0]));
        g.caustic_upper.push_back(mp(x, ys[1]));
        if (spec.include_ridge) g.ridge_y_curve.push_back(mp(x, ridge_y(q, x)));
    }
    if (spec.include_ridge)
        for (int i = 0; i < N; ++i) {
            double y = g.bounds.y_min + (g.bounds.y_max - g.bounds.y_min) * i / (N - 1);
            g.ridge_x_curve.push_back(mp(ridge_x(q, y), y));
        }

    // gate contact set with secondary contacts at zero-width edges
    GateContacts gc = gate_contacts(q);
    struct Contact {
        char letter;
        std::array<double, 2> raw;
    };
    std::vector<Contact> contacts{
        {'N', gc.N}, {'S', gc.S}, {'E', gc.E}, {'W', gc.W}};
    if (gc.W2) contacts.push_back({'W', *gc.W2});
    if (gc.S2) contacts.push_back({'S', *gc.S2});

    for (const Contact& c : contacts) {
        g.gate_points.push_back(mp(c.raw[0], c.raw[1]));
        g.gate_labels.push_back(std::string("gate_") + c.letter);
    }

    // coalescences: distinct gate letters touching at one screen point
    double sx = std::max(g.bounds.x_max - g.bounds.x_min, 1e-300);
    double sy = std::max(g.bounds.y_max - g.bounds.y_min, 1e-300);
    auto rank = [](char c) { return std::string("NSEW").find(c); };
    std::vector<std::string> labels;
    for (size_t i = 0; i < contacts.size(); ++i)
        for (size_t j = i + 1; j < contacts.size(); ++j) {
            if (contacts[i].letter == contacts[j].letter) continue;
            double dx = (contacts[i].raw[0] - contacts[j].raw[0]) / sx;
            double dy = (contacts[i].raw[1] - contacts[j].raw[1]) / sy;
            if (std::hypot(dx, dy) > kCoalesceTol) continue;
            char p = contacts[i].letter, r = contacts[j].letter;
            if (rank(p) > rank(r)) std::swap(p, r);
            labels.push_back(std::string(1, p) + "=" + std::string(1, r));
        }
    std::sort(labels.begin(), labels.end(),
              [&](const std::string& a, const std::string& b) {
                  return std::make_pair(rank(a[0]), rank(a[2])) <
                         std::make_pair(rank(b[0]), rank(b[2]));
              });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    g.coalescences = labels;
    return g;
}

void attach_trace(ScreenGeometry& g, const TraceReport& trace) {
    g.trace.clear();
    for (const Configuration& c : trace.samples) {
        DiagonalPair p = map_point(g.sides, c.diagonals.x, c.diagonals.y, g.normalized);
        g.trace.push_back({p.x, p.y});
    }
    if (trace.closed && !g.trace.empty()) g.trace.push_back(g.trace.front());
}

namespace {

void emit_rows(std::ostream& out, const char* name, const PointList& pts,
               bool flag_col, bool flag) {
    for (const auto& p : pts) {
        out << name << ',' << format_g12(p[0]) << ',' << format_g12(p[1]);
        if (flag_col) out << ',' << (flag ? 1 : 0);
        out << '\n';
    }
}

}  // namespace

void emit_csv(const ScreenGeometry& g, std::ostream& out) {
    bool fc = g.normalized;
    out << "curve,x,y" << (fc ? ",square_ok" : "") << '\n';
    emit_rows(out, "caustic_upper", g.caustic_upper, fc, g.square_ok);
    emit_rows(out, "caustic_lower", g.caustic_lower, fc, g.square_ok);
    emit_rows(out, "ridge_x", g.ridge_x_curve, fc, g.square_ok);
    emit_rows(out, "ridge_y", g.ridge_y_curve, fc, g.square_ok);
    for (const char* gate : {"gate_N", "gate_S", "gate_E", "gate_W"}) {
        PointList pts;
        for (size_t i = 0; i < g.gate_labels.size(); ++i)
            if (g.gate_labels[i] == gate) pts.push_back(g.gate_points[i]);
        emit_rows(out, gate, pts, fc, g.square_ok);
    }
    emit_rows(out, "trace", g.trace, fc, g.square_ok);
}

ScreenGeometry parse_csv(std::istream& in) {
    ScreenGeometry g;
    std::string line;
    if (!std::getline(in, line)) throw io_error("empty CSV");
    g.normalized = line.find(",square_ok") != std::string::npos;
    g.square_ok = true;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string curve, sx, sy, sflag;
        std::getline(row, curve, ',');
        std::getline(row, sx, ',');
        std::getline(row, sy, ',');
        if (g.normalized) {
            std::getline(row, sflag, ',');
            g.square_ok = sflag == "1";
        }
        std::array<double, 2> p{std::strtod(sx.c_str(), nullptr),
                                std::strtod(sy.c_str(), nullptr)};
        if (curve == "caustic_upper")
            g.caustic_upper.push_back(p);
        else if (curve == "caustic_lower")
            g.caustic_lower.push_back(p);
        else if (curve == "ridge_x")
            g.ridge_x_curve.push_back(p);
        else if (curve == "ridge_y")
            g.ridge_y_curve.push_back(p);
        else if (curve.rfind("gate_", 0) == 0) {
            g.gate_points.push_back(p);
            g.gate_labels.push_back(curve);
        } else if (curve == "trace")
            g.trace.push_back(p);
        else
            throw io_error("unknown curve name in CSV: " + curve);
    }
    return g;
}

namespace {

struct PixelMap {
    double rx0, rx1, ry0, ry1;
    double ml = 90, mt = 70, pw = 630, ph = 500, h = 640;
    double px(double x) const { return ml + (x - rx0) / (rx1 - rx0) * pw; }
    double py(double y) const { return h - 70 - (y - ry0) / (ry1 - ry0) * ph; }
};

std::string fmt2(double v) {
    char buf[32];
    snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void polyline(std::ostream& out, const PixelMap& m, const PointList& pts,
              const char* style) {
    if (pts.empty()) return;
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << fmt2(m.px(pts[i][0])) << ',' << fmt2(m.py(pts[i][1]));
    }
    out << "\"/>\n";
}

}  // namespace

void emit_svg(const ScreenGeometry& g, std::ostream& out) {
    const QuadSides& q = g.sides;
    DiagonalPair lo = map_point(q, g.bounds.x_min, g.bounds.y_min, g.normalized);
    DiagonalPair hi = map_point(q, g.bounds.x_max, g.bounds.y_max, g.normalized);
    PixelMap m;
    double padx = (hi.x - lo.x) * 0.05, pady = (hi.y - lo.y) * 0.05;
    if (padx <= 0) padx = 1;
    if (pady <= 0) pady = 1;
    m.rx0 = lo.x - padx;
    m.rx1 = hi.x + padx;
    m.ry0 = lo.y - pady;
    m.ry1 = hi.y + pady;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"640\" "
           "viewBox=\"0 0 760 640\">\n";
    out << "<rect width=\"760\" height=\"640\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"90\" y=\"34\" font-family=\"sans-serif\" font-size=\"17\" "
           "fill=\"#222\">screen a=" << format_g12(q.a) << " b=" << format_g12(q.b)
        << " c=" << format_g12(q.c) << " d=" << format_g12(q.d)
        << (g.normalized ? " (normalized)" : "") << "</text>\n";

    // band rectangle
    out << "<rect x=\"" << fmt2(m.px(lo.x)) << "\" y=\"" << fmt2(m.py(hi.y))
        << "\" width=\"" << fmt2(m.px(hi.x) - m.px(lo.x)) << "\" height=\""
        << fmt2(m.py(lo.y) - m.py(hi.y))
        << "\" fill=\"#f7f6f1\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    if (g.piero_line) {
        double a0 = std::max(lo.x, lo.y), a1 = std::min(hi.x, hi.y);
        if (a1 > a0)
            out << "<line x1=\"" << fmt2(m.px(a0)) << "\" y1=\"" << fmt2(m.py(a0))
                << "\" x2=\"" << fmt2(m.px(a1)) << "\" y2=\"" << fmt2(m.py(a1))
                << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2 4\" "
                   "stroke-width=\"1\"/>\n";
    }

    polyline(out, m, g.ridge_y_curve,
             "stroke=\"#8a8a8a\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
    polyline(out, m, g.ridge_x_curve,
             "stroke=\"#8a8a8a\" stroke-width=\"1\" stroke-dasharray=\"2 3\"");
    polyline(out, m, g.caustic_upper, "stroke=\"#222222\" stroke-width=\"1.6\"");
    polyline(out, m, g.caustic_lower, "stroke=\"#222222\" stroke-width=\"1.6\"");
    polyline(out, m, g.trace, "stroke=\"#b5472a\" stroke-width=\"1.2\"");

    for (size_t i = 0; i < g.gate_points.size(); ++i) {
        double cx = m.px(g.gate_points[i][0]), cy = m.py(g.gate_points[i][1]);
        out << "<circle cx=\"" << fmt2(cx) << "\" cy=\"" << fmt2(cy)
            << "\" r=\"4\" fill=\"#1f6fb5\"/>\n";
        out << "<text x=\"" << fmt2(cx + 7) << "\" y=\"" << fmt2(cy - 6)
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#1f6fb5\">"
            << g.gate_labels[i].substr(5) << "</text>\n";
    }

    // axis annotations
    out << "<text x=\"" << fmt2(m.px(lo.x)) << "\" y=\"616\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\"#555\">x: [" << format_g12(lo.x) << ", "
        << format_g12(hi.x) << "]</text>\n";
    out << "<text x=\"12\" y=\"" << fmt2(m.py(hi.y))
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555\">y: ["
        << format_g12(lo.y) << ", " << format_g12(hi.y) << "]</text>\n";

    double ty = 52;
    if (!g.coalescences.empty()) {
        out << "<text x=\"90\" y=\"" << fmt2(ty)
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#7a4ca0\">"
               "coalescences:";
        for (const std::string& c : g.coalescences) out << ' ' << c;
        out << "</text>\n";
        ty += 0;
    }
    if (g.normalized && !g.square_ok)
        out << "<text x=\"420\" y=\"34\" font-family=\"sans-serif\" font-size=\"13\" "
               "fill=\"#b03030\">warning: bounds exceed the normalization square"
               "</text>\n";
    out << "</svg>\n";
}

namespace {

nlohmann::ordered_json points_json(const PointList& pts) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : pts)
        arr.push_back(nlohmann::ordered_json::array({quant12(p[0]), quant12(p[1])}));
    return arr;
}

}  // namespace

std::string screen_json(const ScreenGeometry& g) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["sides"] = {{"a", quant12(g.sides.a)},
                  {"b", quant12(g.sides.b)},
                  {"c", quant12(g.sides.c)},
                  {"d", quant12(g.sides.d)}};
    j["bounds"] = {{"x_min", quant12(g.bounds.x_min)},
                   {"x_max", quant12(g.bounds.x_max)},
                   {"y_min", quant12(g.bounds.y_min)},
                   {"y_max", quant12(g.bounds.y_max)},
                   {"square_assumption_holds", g.bounds.square_assumption_holds}};
    j["caustic_upper"] = points_json(g.caustic_upper);
    j["caustic_lower"] = points_json(g.caustic_lower);
    j["ridge_x_curve"] = points_json(g.ridge_x_curve);
    j["ridge_y_curve"] = points_json(g.ridge_y_curve);
    j["gates"] = {{"y_W", quant12(g.gate_values.y_W)},
                  {"y_E", quant12(g.gate_values.y_E)},
                  {"x_S", quant12(g.gate_values.x_S)},
                  {"x_N", quant12(g.gate_values.x_N)}};
    j["gate_points"] = points_json(g.gate_points);
    j["gate_labels"] = g.gate_labels;
    j["coalescences"] = g.coalescences;
    j["piero_line"] = g.piero_line;
    j["normalized"] = g.normalized;
    j["square_ok"] = g.square_ok;
    j["trace"] = points_json(g.trace);
    return j.dump(2) + "\n";
}

}  // namespace linkscreen
