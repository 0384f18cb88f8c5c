#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkscreen/geometry.hpp"

namespace linkscreen {

// Half-sum / half-difference coordinates of a quadruple:
//   s = (a+b+c+d)/2          u = ((a+b)-(c+d))/2
//   r = ((a+c)-(b+d))/2      v = ((a+d)-(b+c))/2
// t0..t3 are the doubled aliases (2s, 2r, 2u, 2v).
struct ReggeVariables {
    double s = 0, r = 0, u = 0, v = 0;
    double t0 = 0, t1 = 0, t2 = 0, t3 = 0;
};

ReggeVariables regge_variables(const QuadSides& q);

// Inverse map; accepts any (s,r,u,v) yielding positive sides.
QuadSides sides_from_regge(double s, double r, double u, double v);

struct GrashofReport {
    bool satisfied = false;   // s_len + l_len <= p_len + q_len
    bool boundary = false;    // equality within tolerance
    double s_len = 0, l_len = 0;  // shortest, longest
    double p_len = 0, q_len = 0;  // remaining two, p_len <= q_len
};

GrashofReport grashof_test(const QuadSides& q);

enum class Movement { crank, rocker, zero_rocker, pi_rocker };

const char* movement_name(Movement m);  // "crank", "rocker", "0-rocker", "pi-rocker"

// One of the 27 sign-pattern classes of (r, u, v): the eight unprimed /
// primed Roman pairs for no zeros, numbered cases 1-19 otherwise.
struct CaseReport {
    std::string id;                      // "I", "IV'", "8", "19", ...
    std::array<int, 3> signs{0, 0, 0};   // sign(r), sign(u), sign(v)
    Movement input_movement = Movement::crank;   // catalog values for the class
    Movement output_movement = Movement::crank;
    bool regge_symmetric = false;        // at least one of r, u, v vanishes
};

CaseReport classify_case(const QuadSides& q);

// Catalog row for an explicit sign pattern (each of sr, su, sv in
// {-1, 0, +1}); classify_case composes sign extraction with this.
CaseReport case_for_signs(int sr, int su, int sv);

// The conjugate quadruple (s-a, s-b, s-c, s-d). Involution; preserves s
// and negates (r, u, v). Throws input_error if any conjugate side would
// be non-positive (equivalent to a polygon inequality failure).
QuadSides regge_conjugate(const QuadSides& q);

struct SignLawReport {
    ReggeVariables original, conjugate;
    bool negated = false;        // (r,u,v) -> (-r,-u,-v) held exactly
    bool grashof_flipped = false;  // strict Grashof state swapped
};

SignLawReport conjugation_sign_law(const QuadSides& q);

// Two-row symbol (a b x / c d y): a quadrilateral with both diagonals.
// Entries may be any reals; validity is tracked, not enforced.
struct SixTuple {
    std::array<double, 6> v{};  // a, b, x, c, d, y

    double a() const { return v[0]; }
    double b() const { return v[1]; }
    double x() const { return v[2]; }
    double c() const { return v[3]; }
    double d() const { return v[4]; }
    double y() const { return v[5]; }
};

// All four length triads ({a,b,x}, {c,d,x}, {a,d,y}, {c,b,y}) satisfy the
// closed triangle inequality and all entries are non-negative.
bool triad_feasible(const SixTuple& t);

struct OrbitEntry {
    SixTuple symbol;
    bool feasible = false;
};

// Closure of the symbol under column permutations, row flips of column
// pairs, and the conjugate transform fixing the diagonal column.
// Deduplicated on the ordered 6-tuple; size divides 144, with 144 for
// generic symbols and 1 for the fully regular one.
std::vector<OrbitEntry> symmetry_orbit(const SixTuple& t);

}  // namespace linkscreen
