#pragma once

#include <array>
#include <optional>
#include <utility>

namespace linkscreen {

// Cyclic side lengths of a quadrilateral four-bar loop. The labels run
// around the loop: a, b, c, d with (a,c) and (b,d) the opposite pairs.
// Diagonal x joins the a∧b and c∧d corners, diagonal y the other two,
// so x is constrained by the triads {a,b,x}, {c,d,x} and y by
// {a,d,y}, {c,b,y}.
struct QuadSides {
    double a = 0, b = 0, c = 0, d = 0;

    // Maps canonical slot -> position in the labeling the caller supplied
    // (identity unless produced by canonicalize()).
    std::array<int, 4> original_order{0, 1, 2, 3};
    bool canonical = false;

    double operator[](int i) const {
        return i == 0 ? a : i == 1 ? b : i == 2 ? c : d;
    }
};

// Validates and builds a QuadSides in the caller's labeling.
// Throws input_error on non-positive sides or polygon inequality failure.
QuadSides make_sides(double a, double b, double c, double d);

// Relabels so that a is a shortest side, c sits opposite it, and d is the
// longer of the remaining pair. Opposite-pair sets are preserved; among
// valid relabelings the one moving fewest labels wins, ties broken
// lexicographically. Throws input_error like make_sides.
QuadSides canonicalize(double a, double b, double c, double d);

// True if the labeling already satisfies the canonical ordering.
bool is_canonical_order(const QuadSides& q);

struct DiagonalPair {
    double x = 0, y = 0;
};

// Feasible diagonal bands: each diagonal is limited by both of its
// triads, e.g. x in [max(|b-a|, |d-c|), min(a+b, c+d)].
// square_assumption_holds reports whether these equal the simple square
// (b-a, b+a) x (d-a, d+a); that shortcut presumes one pair of triads is
// always the binding one and fails for sides like (3,4,12,9), where the
// {c,d,x} triad tightens the x band to [3,7] while b-a = 1.
struct ScreenBounds {
    double x_min = 0, x_max = 0;
    double y_min = 0, y_max = 0;
    bool square_assumption_holds = false;
};

// Principal caustic contact values at the four band edges: y at x_min (W),
// y at x_max (E), x at y_min (S), x at y_max (N).
struct Gates {
    double y_W = 0, y_E = 0, x_S = 0, x_N = 0;
};

struct TetraVolumeInput {
    QuadSides sides;
    double x = 0;    // hinge diagonal
    double phi = 0;  // dihedral angle along x, radians in [0, pi]
};

// Triangle area from side lengths via the factored square
// 16F^2 = [(p+q)^2 - r^2][r^2 - (q-p)^2]. Degenerate (collinear) triads
// give 0; inequality violations beyond tolerance throw input_error.
double heron_area(double p, double q, double r);

// Quadrilateral area from both diagonals: K = sqrt(4x^2 y^2 - C^2)/4 with
// C = b^2 + d^2 - a^2 - c^2. Throws input_error when the radicand is
// negative beyond tolerance (no such planar quadrilateral).
double bretschneider_area(const QuadSides& q, double x, double y);

// The two planar-configuration branches y(x): solutions of
// 4x^2 y^2 = C^2 + (sqrt(P) ± sqrt(Q))^2 where P, Q are the factored
// Heron squares of the {a,b,x} and {c,d,x} triads. Returned ascending
// (lower, upper); they coincide at band edges. x outside the feasible
// band throws input_error.
std::array<double, 2> caustic_y(const QuadSides& q, double x);

// Same locus solved for x at given y (triads {a,d,y}, {c,b,y}).
std::array<double, 2> caustic_x(const QuadSides& q, double y);

// Ridge curves: the y (resp. x) of maximal tetrahedron volume over the
// hinge x (resp. y), phi = pi/2. Lies strictly between the caustic
// branches away from band edges.
double ridge_y(const QuadSides& q, double x);
double ridge_x(const QuadSides& q, double y);

// Relative caustic-membership residual of a point: zero iff (x,y) lies on
// one of the branches. Used to check traced paths against the screen.
double caustic_residual(const QuadSides& q, double x, double y);

// Feasible diagonal bands plus the square-assumption flag.
ScreenBounds screen_bounds(const QuadSides& q);

// Principal gate contact values (see Gates). Where a band edge sits at 0
// (paired equal sides), the principal value is the surviving branch limit.
Gates gates(const QuadSides& q);

// Full gate contact sets: every point where a caustic branch touches the
// band rectangle, keyed N/S/E/W. Branches that ride an edge identically
// (the all-equal lower branch) contribute no contact points.
struct GateContacts {
    std::array<double, 2> N{}, S{}, E{}, W{};  // points as {x, y}
    // secondary contacts exist only for zero-width band edges
    std::optional<std::array<double, 2>> W2, S2;
};
GateContacts gate_contacts(const QuadSides& q);

// Volume of the tetrahedron obtained by folding the two x-triangles to
// dihedral phi: V = (2 / 3x) Fab Fcd sin(phi).
double tetra_volume(const TetraVolumeInput& in);

// Affine map of a screen point into the unit square of the simple
// (b-a, b+a) x (d-a, d+a) bounds; applied regardless of whether the
// square assumption holds (second member of the result is false when it
// does not, callers should surface a warning).
std::pair<DiagonalPair, bool> normalize_screen(const QuadSides& q, DiagonalPair p);
std::pair<DiagonalPair, bool> denormalize_screen(const QuadSides& q, DiagonalPair p);

}  // namespace linkscreen
