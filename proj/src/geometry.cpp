#include "linkscreen/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "linkscreen/errors.hpp"

namespace linkscreen {

namespace {

constexpr double kRelTol = 1e-9;

double sq(double v) { return v * v; }

double semiperimeter(const QuadSides& q) { return (q.a + q.b + q.c + q.d) / 2; }

// 16 * (triangle area)^2 in factored form; roundoff-negative values from
// in-band arguments are clamped to zero.
double heron16(double p, double q, double r) {
    double f = (p + q - r) * (p + q + r) * (r - p + q) * (r + p - q);
    return std::max(0.0, f);
}

void validate_lengths(double a, double b, double c, double d) {
    for (double v : {a, b, c, d})
        if (!(v > 0) || !std::isfinite(v))
            throw input_error("side lengths must be positive finite numbers");
    double sum = a + b + c + d;
    double mx = std::max({a, b, c, d});
    if (sum - 2 * mx <= kRelTol * sum)
        throw input_error("polygon inequality violated: one side reaches the sum of the others");
}

}  // namespace

QuadSides make_sides(double a, double b, double c, double d) {
    validate_lengths(a, b, c, d);
    QuadSides q{a, b, c, d};
    q.canonical = is_canonical_order(q);
    return q;
}

bool is_canonical_order(const QuadSides& q) {
    return q.a <= q.b && q.a <= q.c && q.a <= q.d && q.d >= q.b;
}

QuadSides canonicalize(double a, double b, double c, double d) {
    validate_lengths(a, b, c, d);
    std::array<double, 4> v{a, b, c, d};
    double mn = std::min({a, b, c, d});

    // Relabelings that keep the cycle: start at a minimal side, read in
    // either direction, keep those with d >= b. Fewest moved labels wins,
    // then lexicographic position order.
    std::array<int, 4> best{};
    int best_moved = 5;
    bool found = false;
    for (int j = 0; j < 4; ++j) {
        if (v[j] != mn) continue;
        for (int dir : {1, -1}) {
            std::array<int, 4> pos;
            for (int i = 0; i < 4; ++i) pos[i] = ((j + dir * i) % 4 + 4) % 4;
            if (v[pos[3]] < v[pos[1]]) continue;  // need d >= b
            int moved = 0;
            for (int i = 0; i < 4; ++i)
                if (pos[i] != i) ++moved;
            if (!found || moved < best_moved || (moved == best_moved && pos < best)) {
                best = pos;
                best_moved = moved;
                found = true;
            }
        }
    }

    QuadSides q{v[best[0]], v[best[1]], v[best[2]], v[best[3]]};
    q.original_order = best;
    q.canonical = true;
    return q;
}

double heron_area(double p, double q, double r) {
    for (double v : {p, q, r})
        if (v < 0 || !std::isfinite(v))
            throw input_error("triangle sides must be non-negative finite numbers");
    double scale = p + q + r;
    if (scale <= 0) throw input_error("degenerate triangle: all sides zero");
    double f = (p + q - r) * (p + q + r) * (r - p + q) * (r + p - q);
    if (f < -kRelTol * sq(sq(scale)))
        throw input_error("triangle inequality violated");
    return std::sqrt(std::max(0.0, f)) / 4;
}

ScreenBounds screen_bounds(const QuadSides& q) {
    ScreenBounds b;
    b.x_min = std::max(std::fabs(q.b - q.a), std::fabs(q.d - q.c));
    b.x_max = std::min(q.a + q.b, q.c + q.d);
    b.y_min = std::max(std::fabs(q.d - q.a), std::fabs(q.c - q.b));
    b.y_max = std::min(q.a + q.d, q.c + q.b);
    b.square_assumption_holds =
        b.x_min == q.b - q.a && b.x_max == q.b + q.a &&
        b.y_min == q.d - q.a && b.y_max == q.d + q.a;
    return b;
}

namespace {

void check_x_in_band(const QuadSides& q, const ScreenBounds& b, double& x) {
    double tol = kRelTol * semiperimeter(q);
    if (!std::isfinite(x) || x < b.x_min - tol || x > b.x_max + tol)
        throw input_error("diagonal x outside the feasible band");
    x = std::clamp(x, b.x_min, b.x_max);
}

void check_y_in_band(const QuadSides& q, const ScreenBounds& b, double& y) {
    double tol = kRelTol * semiperimeter(q);
    if (!std::isfinite(y) || y < b.y_min - tol || y > b.y_max + tol)
        throw input_error("diagonal y outside the feasible band");
    y = std::clamp(y, b.y_min, b.y_max);
}

double big_C(const QuadSides& q) {
    return sq(q.b) + sq(q.d) - sq(q.a) - sq(q.c);
}

}  // namespace

std::array<double, 2> caustic_y(const QuadSides& q, double x) {
    ScreenBounds b = screen_bounds(q);
    check_x_in_band(q, b, x);
    double s = semiperimeter(q);
    if (x < kRelTol * s) {
        // zero-width west edge (a=b and c=d): the branch limits
        return {std::fabs(q.c - q.a), q.c + q.a};
    }
    double C = big_C(q);
    double sp = std::sqrt(heron16(q.a, q.b, x));
    double sr = std::sqrt(heron16(q.c, q.d, x));
    double lo = std::sqrt(sq(C) + sq(sp - sr)) / (2 * x);
    double hi = std::sqrt(sq(C) + sq(sp + sr)) / (2 * x);
    lo = std::clamp(lo, b.y_min, b.y_max);
    hi = std::clamp(hi, b.y_min, b.y_max);
    return {lo, hi};
}

std::array<double, 2> caustic_x(const QuadSides& q, double y) {
    ScreenBounds b = screen_bounds(q);
    check_y_in_band(q, b, y);
    double s = semiperimeter(q);
    if (y < kRelTol * s) {
        // zero-width south edge (a=d and b=c)
        return {std::fabs(q.b - q.a), q.b + q.a};
    }
    double C = big_C(q);
    double sp = std::sqrt(heron16(q.a, q.d, y));
    double sr = std::sqrt(heron16(q.c, q.b, y));
    double lo = std::sqrt(sq(C) + sq(sp - sr)) / (2 * y);
    double hi = std::sqrt(sq(C) + sq(sp + sr)) / (2 * y);
    lo = std::clamp(lo, b.x_min, b.x_max);
    hi = std::clamp(hi, b.x_min, b.x_max);
    return {lo, hi};
}

double ridge_y(const QuadSides& q, double x) {
    ScreenBounds b = screen_bounds(q);
    check_x_in_band(q, b, x);
    double s = semiperimeter(q);
    if (x < kRelTol * s)
        return std::sqrt(sq(q.a) + sq(q.c));  // limit of the midline at the zero edge
    double C = big_C(q);
    double P = heron16(q.a, q.b, x);
    double Q = heron16(q.c, q.d, x);
    double v = std::sqrt(sq(C) + P + Q) / (2 * x);
    return std::clamp(v, b.y_min, b.y_max);
}

double ridge_x(const QuadSides& q, double y) {
    ScreenBounds b = screen_bounds(q);
    check_y_in_band(q, b, y);
    double s = semiperimeter(q);
    if (y < kRelTol * s)
        return std::sqrt(sq(q.a) + sq(q.b));
    double C = big_C(q);
    double P = heron16(q.a, q.d, y);
    double Q = heron16(q.c, q.b, y);
    double v = std::sqrt(sq(C) + P + Q) / (2 * y);
    return std::clamp(v, b.x_min, b.x_max);
}

double caustic_residual(const QuadSides& q, double x, double y) {
    ScreenBounds b = screen_bounds(q);
    double s = semiperimeter(q);
    double tol = kRelTol * s;
    double best = 1.0;
    if (x >= b.x_min - tol && x <= b.x_max + tol) {
        auto ys = caustic_y(q, x);
        best = std::min({best, std::fabs(y - ys[0]) / s, std::fabs(y - ys[1]) / s});
    }
    if (y >= b.y_min - tol && y <= b.y_max + tol) {
        auto xs = caustic_x(q, y);
        best = std::min({best, std::fabs(x - xs[0]) / s, std::fabs(x - xs[1]) / s});
    }
    return best;
}

double bretschneider_area(const QuadSides& q, double x, double y) {
    ScreenBounds b = screen_bounds(q);
    check_x_in_band(q, b, x);
    check_y_in_band(q, b, y);
    double s = semiperimeter(q);
    double C = big_C(q);
    double rad = 4 * sq(x) * sq(y) - sq(C);
    if (rad < -kRelTol * sq(sq(s)))
        throw input_error("no planar quadrilateral realizes this diagonal pair");
    return std::sqrt(std::max(0.0, rad)) / 4;
}

Gates gates(const QuadSides& q) {
    ScreenBounds b = screen_bounds(q);
    double s = semiperimeter(q);
    double tol = kRelTol * s;
    double C = big_C(q);

    auto y_at_x_edge = [&](double xe) {
        double v = std::sqrt(sq(C) + heron16(q.a, q.b, xe) + heron16(q.c, q.d, xe)) / (2 * xe);
        return std::clamp(v, b.y_min, b.y_max);
    };
    auto x_at_y_edge = [&](double ye) {
        double v = std::sqrt(sq(C) + heron16(q.a, q.d, ye) + heron16(q.c, q.b, ye)) / (2 * ye);
        return std::clamp(v, b.x_min, b.x_max);
    };

    Gates g;
    g.y_W = b.x_min < tol ? q.a + q.c : y_at_x_edge(b.x_min);
    g.y_E = y_at_x_edge(b.x_max);
    g.x_S = b.y_min < tol ? q.a + q.b : x_at_y_edge(b.y_min);
    g.x_N = x_at_y_edge(b.y_max);
    return g;
}

namespace {

// True when the lower branch of the given sampler sits on its band edge
// identically (an edge-riding degenerate branch, not a contact point).
bool lower_branch_rides_edge(const QuadSides& q, bool y_of_x) {
    ScreenBounds b = screen_bounds(q);
    double tol = 1e-7 * semiperimeter(q);
    double lo = y_of_x ? b.x_min : b.y_min;
    double hi = y_of_x ? b.x_max : b.y_max;
    double edge = y_of_x ? b.y_min : b.x_min;
    for (int i = 1; i <= 5; ++i) {
        double t = lo + (hi - lo) * i / 6.0;
        double v = y_of_x ? caustic_y(q, t)[0] : caustic_x(q, t)[0];
        if (std::fabs(v - edge) > tol) return false;
    }
    return true;
}

}  // namespace

GateContacts gate_contacts(const QuadSides& q) {
    ScreenBounds b = screen_bounds(q);
    Gates g = gates(q);
    double tol = kRelTol * semiperimeter(q);

    GateContacts gc;
    gc.N = {g.x_N, b.y_max};
    gc.S = {g.x_S, b.y_min};
    gc.E = {b.x_max, g.y_E};
    gc.W = {b.x_min, g.y_W};
    if (b.x_min < tol && !lower_branch_rides_edge(q, true))
        gc.W2 = {{b.x_min, std::fabs(q.c - q.a)}};
    if (b.y_min < tol && !lower_branch_rides_edge(q, false))
        gc.S2 = {{std::fabs(q.b - q.a), b.y_min}};
    return gc;
}

double tetra_volume(const TetraVolumeInput& in) {
    const QuadSides& q = in.sides;
    ScreenBounds b = screen_bounds(q);
    double x = in.x;
    check_x_in_band(q, b, x);
    double s = semiperimeter(q);
    double pi = std::acos(-1.0);
    if (!(in.phi >= -kRelTol) || !(in.phi <= pi + kRelTol))
        throw input_error("dihedral angle outside [0, pi]");
    double phi = std::clamp(in.phi, 0.0, pi);
    if (x < kRelTol * s) return 0;
    double Fab = heron_area(q.a, q.b, x);
    double Fcd = heron_area(q.c, q.d, x);
    return (2.0 / (3.0 * x)) * Fab * Fcd * std::sin(phi);
}

std::pair<DiagonalPair, bool> normalize_screen(const QuadSides& q, DiagonalPair p) {
    ScreenBounds b = screen_bounds(q);
    double tol = kRelTol * semiperimeter(q);
    if (p.x < b.x_min - tol || p.x > b.x_max + tol ||
        p.y < b.y_min - tol || p.y > b.y_max + tol)
        throw input_error("point outside the screen bounds");
    DiagonalPair out{(p.x - (q.b - q.a)) / (2 * q.a), (p.y - (q.d - q.a)) / (2 * q.a)};
    return {out, b.square_assumption_holds};
}

std::pair<DiagonalPair, bool> denormalize_screen(const QuadSides& q, DiagonalPair p) {
    double tol = kRelTol;
    if (p.x < -tol || p.x > 1 + tol || p.y < -tol || p.y > 1 + tol)
        throw input_error("normalized point outside the unit square");
    DiagonalPair out{p.x * 2 * q.a + (q.b - q.a), p.y * 2 * q.a + (q.d - q.a)};
    return {out, screen_bounds(q).square_assumption_holds};
}

}  // namespace linkscreen
