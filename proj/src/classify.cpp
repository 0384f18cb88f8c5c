#include "linkscreen/classify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "linkscreen/errors.hpp"

namespace linkscreen {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kRelTol = 1e-9;

int sign_of(double v, double scale) {
    if (std::fabs(v) <= kZeroTol * scale) return 0;
    return v > 0 ? 1 : -1;
}

}  // namespace

const char* movement_name(Movement m) {
    switch (m) {
        case Movement::crank: return "crank";
        case Movement::rocker: return "rocker";
        case Movement::zero_rocker: return "0-rocker";
        case Movement::pi_rocker: return "pi-rocker";
    }
    return "?";
}

ReggeVariables regge_variables(const QuadSides& q) {
    ReggeVariables rv;
    rv.s = (q.a + q.b + q.c + q.d) / 2;
    rv.u = ((q.a + q.b) - (q.c + q.d)) / 2;
    rv.r = ((q.a + q.c) - (q.b + q.d)) / 2;
    rv.v = ((q.a + q.d) - (q.b + q.c)) / 2;
    rv.t0 = 2 * rv.s;
    rv.t1 = 2 * rv.r;
    rv.t2 = 2 * rv.u;
    rv.t3 = 2 * rv.v;
    return rv;
}

QuadSides sides_from_regge(double s, double r, double u, double v) {
    return make_sides((s + r + u + v) / 2, (s - r + u - v) / 2,
                      (s + r - u - v) / 2, (s - r - u + v) / 2);
}

GrashofReport grashof_test(const QuadSides& q) {
    std::array<double, 4> v{q.a, q.b, q.c, q.d};
    std::sort(v.begin(), v.end());
    GrashofReport g;
    g.s_len = v[0];
    g.l_len = v[3];
    g.p_len = v[1];
    g.q_len = v[2];
    double lhs = g.s_len + g.l_len, rhs = g.p_len + g.q_len;
    double tol = kZeroTol * (lhs + rhs);
    g.boundary = std::fabs(lhs - rhs) <= tol;
    g.satisfied = lhs <= rhs + tol;
    return g;
}

namespace {

struct CaseRow {
    const char* id;
    Movement in, out;
};

// Catalog of the 27 sign classes of (r, u, v), indexed by
// (sign(r)+1)*9 + (sign(u)+1)*3 + (sign(v)+1).
constexpr CaseRow kCaseTable[27] = {
    {"IV'", Movement::zero_rocker, Movement::zero_rocker},  // (-,-,-)
    {"8", Movement::crank, Movement::crank},                // (-,-,0)
    {"I", Movement::crank, Movement::crank},                // (-,-,+)
    {"11", Movement::zero_rocker, Movement::zero_rocker},   // (-,0,-)
    {"16", Movement::crank, Movement::crank},               // (-,0,0)
    {"3", Movement::crank, Movement::crank},                // (-,0,+)
    {"III", Movement::rocker, Movement::rocker},            // (-,+,-)
    {"6", Movement::pi_rocker, Movement::pi_rocker},        // (-,+,0)
    {"II'", Movement::pi_rocker, Movement::pi_rocker},      // (-,+,+)
    {"12", Movement::zero_rocker, Movement::crank},         // (0,-,-)
    {"17", Movement::crank, Movement::crank},               // (0,-,0)
    {"4", Movement::crank, Movement::crank},                // (0,-,+)
    {"18", Movement::zero_rocker, Movement::crank},         // (0,0,-)
    {"19", Movement::crank, Movement::crank},               // (0,0,0)
    {"13", Movement::crank, Movement::crank},               // (0,0,+)
    {"9", Movement::zero_rocker, Movement::pi_rocker},      // (0,+,-)
    {"14", Movement::crank, Movement::pi_rocker},           // (0,+,0)
    {"1", Movement::crank, Movement::pi_rocker},            // (0,+,+)
    {"II", Movement::rocker, Movement::crank},              // (+,-,-)
    {"7", Movement::pi_rocker, Movement::crank},            // (+,-,0)
    {"III'", Movement::pi_rocker, Movement::zero_rocker},   // (+,-,+)
    {"10", Movement::zero_rocker, Movement::crank},         // (+,0,-)
    {"15", Movement::crank, Movement::crank},               // (+,0,0)
    {"2", Movement::crank, Movement::zero_rocker},          // (+,0,+)
    {"I'", Movement::zero_rocker, Movement::pi_rocker},     // (+,+,-)
    {"5", Movement::crank, Movement::pi_rocker},            // (+,+,0)
    {"IV", Movement::crank, Movement::rocker},              // (+,+,+)
};

}  // namespace

CaseReport case_for_signs(int sr, int su, int sv) {
    CaseReport cr;
    cr.signs = {sr, su, sv};
    const CaseRow& row = kCaseTable[(sr + 1) * 9 + (su + 1) * 3 + (sv + 1)];
    cr.id = row.id;
    cr.input_movement = row.in;
    cr.output_movement = row.out;
    cr.regge_symmetric = sr == 0 || su == 0 || sv == 0;
    return cr;
}

CaseReport classify_case(const QuadSides& q) {
    ReggeVariables rv = regge_variables(q);
    return case_for_signs(sign_of(rv.r, rv.s), sign_of(rv.u, rv.s),
                          sign_of(rv.v, rv.s));
}

QuadSides regge_conjugate(const QuadSides& q) {
    double s = (q.a + q.b + q.c + q.d) / 2;
    return make_sides(s - q.a, s - q.b, s - q.c, s - q.d);
}

SignLawReport conjugation_sign_law(const QuadSides& q) {
    SignLawReport rep;
    rep.original = regge_variables(q);
    QuadSides conj = regge_conjugate(q);
    rep.conjugate = regge_variables(conj);
    double tol = kZeroTol * rep.original.s;
    rep.negated = std::fabs(rep.conjugate.r + rep.original.r) <= tol &&
                  std::fabs(rep.conjugate.u + rep.original.u) <= tol &&
                  std::fabs(rep.conjugate.v + rep.original.v) <= tol &&
                  std::fabs(rep.conjugate.s - rep.original.s) <= tol;
    rep.grashof_flipped = grashof_test(q).satisfied != grashof_test(conj).satisfied;
    return rep;
}

bool triad_feasible(const SixTuple& t) {
    for (double v : t.v)
        if (v < 0 || !std::isfinite(v)) return false;
    double scale = 0;
    for (double v : t.v) scale += v;
    double tol = kRelTol * scale;
    auto ok = [tol](double p, double q, double r) {
        return std::max({p, q, r}) <= p + q + r - std::max({p, q, r}) + tol;
    };
    return ok(t.a(), t.b(), t.x()) && ok(t.c(), t.d(), t.x()) &&
           ok(t.a(), t.d(), t.y()) && ok(t.c(), t.b(), t.y());
}

namespace {

// Generators of the symbol group: column swap and rotation (S3 on the
// three columns), row flips of column pairs (the Klein four-group), and
// the conjugate transform fixing the diagonal column.
SixTuple gen_col_swap(const SixTuple& t) {
    return {{t.b(), t.a(), t.x(), t.d(), t.c(), t.y()}};
}
SixTuple gen_col_rotate(const SixTuple& t) {
    return {{t.b(), t.x(), t.a(), t.d(), t.y(), t.c()}};
}
SixTuple gen_row_flip01(const SixTuple& t) {
    return {{t.c(), t.d(), t.x(), t.a(), t.b(), t.y()}};
}
SixTuple gen_row_flip12(const SixTuple& t) {
    return {{t.a(), t.d(), t.y(), t.c(), t.b(), t.x()}};
}
SixTuple gen_conjugate(const SixTuple& t) {
    double s = (t.a() + t.b() + t.c() + t.d()) / 2;
    return {{s - t.a(), s - t.b(), t.x(), s - t.c(), s - t.d(), t.y()}};
}

bool same_symbol(const SixTuple& p, const SixTuple& q, double tol) {
    for (int i = 0; i < 6; ++i)
        if (std::fabs(p.v[i] - q.v[i]) > tol) return false;
    return true;
}

}  // namespace

std::vector<OrbitEntry> symmetry_orbit(const SixTuple& t) {
    double scale = 0;
    for (double v : t.v) scale += std::fabs(v);
    if (scale <= 0) scale = 1;
    double tol = kRelTol * scale;

    std::vector<SixTuple> seen{t};
    std::deque<SixTuple> frontier{t};
    auto add = [&](const SixTuple& cand) {
        for (const SixTuple& s : seen)
            if (same_symbol(s, cand, tol)) return;
        seen.push_back(cand);
        frontier.push_back(cand);
    };
    while (!frontier.empty()) {
        SixTuple cur = frontier.front();
        frontier.pop_front();
        add(gen_col_swap(cur));
        add(gen_col_rotate(cur));
        add(gen_row_flip01(cur));
        add(gen_row_flip12(cur));
        add(gen_conjugate(cur));
    }

    std::vector<OrbitEntry> orbit;
    orbit.reserve(seen.size());
    for (const SixTuple& s : seen) orbit.push_back({s, triad_feasible(s)});
    return orbit;
}

}  // namespace linkscreen
