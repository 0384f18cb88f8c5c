#include <doctest.h>

#include <cmath>
#include <map>

#include "linkscreen/errors.hpp"
#include "linkscreen/kinematics.hpp"
#include "oracles.hpp"

using namespace linkscreen;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::map<char, int> gate_counts(const TraceReport& rep) {
    std::map<char, int> n;
    for (const GateEvent& e : rep.gate_events) ++n[e.gate];
    return n;
}

}  // namespace

TEST_CASE("assignment wiring") {
    QuadSides q = make_sides(30, 45, 60, 55);
    LinkageAssignment gb = make_assignment(q, 'b');
    CHECK(gb.input == 'a');
    CHECK(gb.coupler == 'd');
    CHECK(gb.output == 'c');
    CHECK(gb.ground_len == 45);
    CHECK(gb.input_len == 30);

    LinkageAssignment ga = make_assignment(q, 'a');
    CHECK(ga.input == 'b');
    CHECK(ga.output == 'd');
    CHECK(ga.coupler == 'c');

    LinkageAssignment gad = make_assignment(q, 'a', 'd');
    CHECK(gad.input == 'd');
    CHECK(gad.output == 'b');
    CHECK(gad.coupler == 'c');

    CHECK_THROWS_AS(make_assignment(q, 'a', 'c'), input_error);  // not adjacent
    CHECK_THROWS_AS(make_assignment(q, 'x'), input_error);
}

TEST_CASE("input angle limits") {
    QuadSides free_running = make_sides(30, 45, 60, 55);
    AngleLimits crank = input_angle_limits(make_assignment(free_running, 'b'));
    CHECK(crank.movement == Movement::crank);
    CHECK(crank.includes_zero);
    CHECK(crank.includes_pi);
    CHECK(crank.theta_lo == 0);
    CHECK(crank.theta_hi == doctest::Approx(2 * kPi));

    QuadSides conj = make_sides(65, 50, 35, 40);
    AngleLimits rock = input_angle_limits(make_assignment(conj, 'a'));
    CHECK(rock.movement == Movement::zero_rocker);
    CHECK(rock.includes_zero);
    CHECK_FALSE(rock.includes_pi);
    CHECK(near(rock.theta_hi, std::acos(11.0 / 65.0), 1e-12));
    CHECK(near(rock.theta_lo, -std::acos(11.0 / 65.0), 1e-12));
    double bis = oracle::bisect_theta_limit(65, 50, 35, 40, 0.0, kPi);
    CHECK(near(rock.theta_hi, bis, 1e-9));

    AngleLimits square = input_angle_limits(make_assignment(make_sides(100, 100, 100, 100), 'a'));
    CHECK(square.movement == Movement::crank);
}

TEST_CASE("solved positions at chosen angles") {
    QuadSides sq = make_sides(100, 100, 100, 100);
    Configuration c = solve_position(make_assignment(sq, 'a'), kPi / 2, Branch::elbow_up);
    // floating corner of the grounded unit square
    int fl = 3;  // V_D is the floating joint for ground a / input b
    CHECK(near(c.vertices[fl][0], 100.0, 1e-9 * 400));
    CHECK(near(c.vertices[fl][1], 100.0, 1e-9 * 400));
    CHECK(near(c.signed_area, 10000.0, 1e-6));
    CHECK(c.shape == Shape::convex);
    CHECK(near(c.diagonals.x, 100.0 * std::sqrt(2.0), 1e-9 * 400));
    CHECK(near(c.diagonals.y, 100.0 * std::sqrt(2.0), 1e-9 * 400));

    QuadSides q = make_sides(30, 45, 60, 55);
    Configuration e = solve_position(make_assignment(q, 'b'), kPi, Branch::elbow_up);
    CHECK(near(e.diagonals.x, 75.0, 1e-9 * 190));
    CHECK(near(e.diagonals.y, std::sqrt(1905.0), 1e-9 * 190));

    CHECK_THROWS_AS(
        solve_position(make_assignment(make_sides(65, 50, 35, 40), 'a'), kPi, Branch::elbow_up),
        input_error);
}

TEST_CASE("branch mirror pairing") {
    LinkageAssignment asg = make_assignment(make_sides(30, 45, 60, 55), 'b');
    for (double th : {0.3, 1.2, 2.5}) {
        Configuration up = solve_position(asg, th, Branch::elbow_up);
        Configuration dn = solve_position(asg, -th, Branch::elbow_down);
        for (int i = 0; i < 4; ++i) {
            CHECK(near(dn.vertices[i][0], up.vertices[i][0], 1e-9 * 190));
            CHECK(near(dn.vertices[i][1], -up.vertices[i][1], 1e-9 * 190));
        }
        CHECK(near(dn.signed_area, -up.signed_area, 1e-6));
        CHECK(near(dn.diagonals.x, up.diagonals.x, 1e-9 * 190));
        CHECK(near(dn.diagonals.y, up.diagonals.y, 1e-9 * 190));
    }
}

TEST_CASE("shape classification") {
    using V = std::array<std::array<double, 2>, 4>;
    CHECK(shape_classify(V{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}) == Shape::convex);
    CHECK(shape_classify(V{{{0, 0}, {4, 0}, {1, 1}, {0, 4}}}) == Shape::concave);
    CHECK(shape_classify(V{{{0, 0}, {2, 0}, {0, 1}, {2, 1}}}) == Shape::crossed);
    CHECK(shape_classify(V{{{0, 0}, {1, 0}, {2, 0}, {1, 1}}}) == Shape::degenerate);
}

TEST_CASE("movement pairs for every grounding of the running example") {
    QuadSides q = make_sides(30, 45, 60, 55);
    struct Row {
        char ground;
        Movement in, out;
    };
    const Row rows[] = {
        {'a', Movement::crank, Movement::crank},
        {'b', Movement::crank, Movement::rocker},
        {'c', Movement::rocker, Movement::rocker},
        {'d', Movement::crank, Movement::rocker},
    };
    for (const Row& r : rows) {
        CAPTURE(r.ground);
        MovementTypes mv = movement_types(make_assignment(q, r.ground));
        CHECK(mv.input == r.in);
        CHECK(mv.output == r.out);
        CHECK(mv.matches_case_table);
    }

    QuadSides conj = make_sides(65, 50, 35, 40);
    MovementTypes mv = movement_types(make_assignment(conj, 'a'));
    CHECK(mv.input == Movement::zero_rocker);
    CHECK(mv.output == Movement::zero_rocker);
    CHECK(mv.matches_case_table);
}

TEST_CASE("closed-form movements agree with the catalog everywhere") {
    const double quads[][4] = {
        {30, 45, 60, 55},     {65, 50, 35, 40},       {100, 110, 130, 140},
        {100, 200, 100, 200}, {100, 100, 1000, 1000}, {100, 100, 100, 100},
        {130, 110, 100, 140}, {130, 100, 110, 140},   {100, 110, 100, 110},
    };
    for (const auto& w : quads)
        for (char g : {'a', 'b', 'c', 'd'}) {
            CAPTURE(w[0]);
            CAPTURE(g);
            CHECK(movement_types(make_assignment(make_sides(w[0], w[1], w[2], w[3]), g))
                      .matches_case_table);
        }

    oracle::QuadSampler sampler(90210);
    for (int n = 0; n < 100; ++n) {
        auto s = sampler.next();
        QuadSides q = make_sides(s[0], s[1], s[2], s[3]);
        for (char g : {'a', 'b', 'c', 'd'}) {
            CAPTURE(n);
            CAPTURE(g);
            CHECK(movement_types(make_assignment(q, g)).matches_case_table);
        }
    }
}

TEST_CASE("crank trace closes in one turn") {
    LinkageAssignment asg = make_assignment(make_sides(30, 45, 60, 55), 'b');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 1);
    CHECK(near(rep.cycle_period, 2 * kPi, 1e-12));
    CHECK(rep.chirality == 1);
    CHECK(rep.fold_count == 0);

    auto n = gate_counts(rep);
    CHECK(n['E'] == 1);
    CHECK(n['N'] == 1);
    CHECK(n['W'] == 1);
    CHECK(n['S'] == 1);
    double tol = 1e-5 * 190;
    for (const GateEvent& e : rep.gate_events) {
        CAPTURE(e.gate);
        CHECK_FALSE(e.fold);
        if (e.gate == 'E') {
            CHECK(near(e.point.x, 75.0, tol));
            CHECK(near(e.point.y, std::sqrt(1905.0), tol));
        }
        if (e.gate == 'W') {
            CHECK(near(e.point.x, 15.0, tol));
            CHECK(near(e.point.y, std::sqrt(3225.0), tol));
        }
        if (e.gate == 'N') CHECK(near(e.point.y, 85.0, tol));
        if (e.gate == 'S') CHECK(near(e.point.y, 25.0, tol));
    }

    TraceReport dn = trace_cycle(asg, Branch::elbow_down);
    CHECK(dn.closed);
    CHECK(dn.chirality == -1);
    CHECK(dn.caustic_loops == 1);
    // strictly separated mirror branches: no shared configuration
    for (const Configuration& c : rep.samples) CHECK(c.signed_area > 0);
    for (const Configuration& c : dn.samples) CHECK(c.signed_area < 0);
}

TEST_CASE("rocker trace needs two passes") {
    LinkageAssignment asg = make_assignment(make_sides(65, 50, 35, 40), 'a');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 2);
    CHECK(near(rep.cycle_period, 4 * kPi, 1e-12));
    CHECK(rep.chirality == 0);
    bool pos = false, neg = false;
    for (const Configuration& c : rep.samples) {
        pos |= c.signed_area > 1e-6;
        neg |= c.signed_area < -1e-6;
    }
    CHECK(pos);
    CHECK(neg);

    // the output is a zero-rocker too: y touches both band edges twice
    auto n = gate_counts(rep);
    CHECK(n['E'] == 2);
    CHECK(n['W'] == 2);
    CHECK(n['N'] == 2);
    CHECK(n['S'] == 2);
    for (const GateEvent& e : rep.gate_events)
        if (e.gate == 'E') CHECK(near(std::cos(e.theta), 11.0 / 65.0, 1e-9));
}

TEST_CASE("boundary quadruple folds through the coalesced corner") {
    LinkageAssignment asg = make_assignment(make_sides(100, 110, 130, 140), 'a');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 2);
    CHECK(rep.chirality == 0);
    CHECK(rep.fold_count == 2);
    int folded = 0;
    for (const GateEvent& e : rep.gate_events)
        if (e.fold) {
            ++folded;
            CHECK((e.gate == 'W' || e.gate == 'N'));
            double tol = 1e-4 * 480;
            CHECK(near(e.point.x, 10.0, tol));
            CHECK(near(e.point.y, 240.0, tol));
        }
    CHECK(folded == 4);  // two passes, a W+N pair each
}

TEST_CASE("regular quadruple folds twice per turn yet closes at one") {
    LinkageAssignment asg = make_assignment(make_sides(100, 100, 100, 100), 'a');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 1);
    CHECK(near(rep.cycle_period, 2 * kPi, 1e-12));
    CHECK(rep.chirality == 0);
    CHECK(rep.fold_count == 2);
}

TEST_CASE("rocker-driven grounding walks the same loop once") {
    LinkageAssignment asg = make_assignment(make_sides(30, 45, 60, 55), 'b', 'c');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 1);
    CHECK(rep.chirality != 0);
    auto n = gate_counts(rep);
    CHECK(n['E'] == 1);
    CHECK(n['N'] == 1);
    CHECK(n['W'] == 1);
    CHECK(n['S'] == 1);
}

TEST_CASE("coarse sampling still closes") {
    LinkageAssignment asg = make_assignment(make_sides(30, 45, 60, 55), 'b');
    TraceReport rep = trace_cycle(asg, Branch::elbow_up, 16);
    CHECK(rep.closed);
    CHECK(rep.caustic_loops == 1);
}
