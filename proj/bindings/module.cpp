#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linkscreen/classify.hpp"
#include "linkscreen/errors.hpp"
#include "linkscreen/geometry.hpp"
#include "linkscreen/kinematics.hpp"
#include "linkscreen/screen.hpp"

namespace py = pybind11;
using namespace linkscreen;

namespace {

QuadSides sides_arg(double a, double b, double c, double d) {
    return make_sides(a, b, c, d);
}

py::dict config_dict(const Configuration& c) {
    py::dict d;
    d["theta"] = c.theta;
    py::list vs;
    for (const auto& v : c.vertices) vs.append(py::make_tuple(v[0], v[1]));
    d["vertices"] = vs;
    d["x"] = c.diagonals.x;
    d["y"] = c.diagonals.y;
    d["signed_area"] = c.signed_area;
    d["shape"] = shape_name(c.shape);
    d["branch"] = c.branch == Branch::elbow_up ? "up" : "down";
    d["singular"] = c.singular;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "diagonal-space screens, Regge symmetry, and four-bar cycles";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<io_error>(m, "IoError", PyExc_IOError);

    m.def("canonicalize", [](double a, double b, double c, double d) {
        QuadSides q = canonicalize(a, b, c, d);
        return py::make_tuple(q.a, q.b, q.c, q.d,
                              py::make_tuple(q.original_order[0], q.original_order[1],
                                             q.original_order[2], q.original_order[3]));
    });

    m.def("screen_bounds", [](double a, double b, double c, double d) {
        ScreenBounds s = screen_bounds(sides_arg(a, b, c, d));
        py::dict r;
        r["x_min"] = s.x_min;
        r["x_max"] = s.x_max;
        r["y_min"] = s.y_min;
        r["y_max"] = s.y_max;
        r["square_assumption_holds"] = s.square_assumption_holds;
        return r;
    });

    m.def("caustic_y", [](double a, double b, double c, double d, double x) {
        auto ys = caustic_y(sides_arg(a, b, c, d), x);
        return py::make_tuple(ys[0], ys[1]);
    });
    m.def("caustic_x", [](double a, double b, double c, double d, double y) {
        auto xs = caustic_x(sides_arg(a, b, c, d), y);
        return py::make_tuple(xs[0], xs[1]);
    });
    m.def("ridge_y", [](double a, double b, double c, double d, double x) {
        return ridge_y(sides_arg(a, b, c, d), x);
    });
    m.def("ridge_x", [](double a, double b, double c, double d, double y) {
        return ridge_x(sides_arg(a, b, c, d), y);
    });
    m.def("caustic_residual", [](double a, double b, double c, double d, double x,
                                 double y) {
        return caustic_residual(sides_arg(a, b, c, d), x, y);
    });

    m.def("gates", [](double a, double b, double c, double d) {
        Gates g = gates(sides_arg(a, b, c, d));
        py::dict r;
        r["y_W"] = g.y_W;
        r["y_E"] = g.y_E;
        r["x_S"] = g.x_S;
        r["x_N"] = g.x_N;
        return r;
    });

    m.def("heron_area", &heron_area);
    m.def("bretschneider_area", [](double a, double b, double c, double d, double x,
                                   double y) {
        return bretschneider_area(sides_arg(a, b, c, d), x, y);
    });
    m.def("tetra_volume", [](double a, double b, double c, double d, double x,
                             double phi) {
        TetraVolumeInput in;
        in.sides = sides_arg(a, b, c, d);
        in.x = x;
        in.phi = phi;
        return tetra_volume(in);
    });

    m.def("normalize_screen", [](double a, double b, double c, double d, double x,
                                 double y) {
        auto [p, ok] = normalize_screen(sides_arg(a, b, c, d), {x, y});
        return py::make_tuple(p.x, p.y, ok);
    });
    m.def("denormalize_screen", [](double a, double b, double c, double d, double x,
                                   double y) {
        auto [p, ok] = denormalize_screen(sides_arg(a, b, c, d), {x, y});
        return py::make_tuple(p.x, p.y, ok);
    });

    m.def("regge_variables", [](double a, double b, double c, double d) {
        ReggeVariables rv = regge_variables(sides_arg(a, b, c, d));
        py::dict r;
        r["s"] = rv.s;
        r["r"] = rv.r;
        r["u"] = rv.u;
        r["v"] = rv.v;
        r["t"] = py::make_tuple(rv.t0, rv.t1, rv.t2, rv.t3);
        return r;
    });

    m.def("grashof_test", [](double a, double b, double c, double d) {
        GrashofReport g = grashof_test(sides_arg(a, b, c, d));
        py::dict r;
        r["satisfied"] = g.satisfied;
        r["boundary"] = g.boundary;
        r["s"] = g.s_len;
        r["l"] = g.l_len;
        r["p"] = g.p_len;
        r["q"] = g.q_len;
        return r;
    });

    m.def("classify_case", [](double a, double b, double c, double d) {
        CaseReport c_ = classify_case(sides_arg(a, b, c, d));
        py::dict r;
        r["case"] = c_.id;
        r["signs"] = py::make_tuple(c_.signs[0], c_.signs[1], c_.signs[2]);
        r["input_movement"] = movement_name(c_.input_movement);
        r["output_movement"] = movement_name(c_.output_movement);
        r["regge_symmetric"] = c_.regge_symmetric;
        return r;
    });

    m.def("regge_conjugate", [](double a, double b, double c, double d) {
        QuadSides q = regge_conjugate(sides_arg(a, b, c, d));
        return py::make_tuple(q.a, q.b, q.c, q.d);
    });

    m.def("conjugation_sign_law", [](double a, double b, double c, double d) {
        SignLawReport law = conjugation_sign_law(sides_arg(a, b, c, d));
        py::dict r;
        r["negated"] = law.negated;
        r["grashof_flipped"] = law.grashof_flipped;
        return r;
    });

    m.def("triad_feasible", [](std::array<double, 6> v) {
        return triad_feasible(SixTuple{v});
    });

    m.def("symmetry_orbit", [](std::array<double, 6> v) {
        py::list out;
        for (const OrbitEntry& e : symmetry_orbit(SixTuple{v})) {
            py::dict r;
            r["symbol"] = py::make_tuple(e.symbol.v[0], e.symbol.v[1], e.symbol.v[2],
                                         e.symbol.v[3], e.symbol.v[4], e.symbol.v[5]);
            r["feasible"] = e.feasible;
            out.append(r);
        }
        return out;
    });

    m.def(
        "solve_position",
        [](double a, double b, double c, double d, char ground, double theta,
           const std::string& branch) {
            LinkageAssignment asg = make_assignment(sides_arg(a, b, c, d), ground);
            Branch br = branch == "down" ? Branch::elbow_down : Branch::elbow_up;
            return config_dict(solve_position(asg, theta, br));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("ground"),
        py::arg("theta"), py::arg("branch") = "up");

    m.def("input_angle_limits", [](double a, double b, double c, double d,
                                   char ground) {
        AngleLimits lim =
            input_angle_limits(make_assignment(sides_arg(a, b, c, d), ground));
        py::dict r;
        r["includes_zero"] = lim.includes_zero;
        r["includes_pi"] = lim.includes_pi;
        r["movement"] = movement_name(lim.movement);
        r["theta_lo"] = lim.theta_lo;
        r["theta_hi"] = lim.theta_hi;
        return r;
    });

    m.def("movement_types", [](double a, double b, double c, double d, char ground) {
        MovementTypes mv = movement_types(make_assignment(sides_arg(a, b, c, d), ground));
        py::dict r;
        r["input"] = movement_name(mv.input);
        r["output"] = movement_name(mv.output);
        r["matches_case_table"] = mv.matches_case_table;
        return r;
    });

    m.def(
        "trace_cycle",
        [](double a, double b, double c, double d, char ground,
           const std::string& branch, int samples_per_turn) {
            LinkageAssignment asg = make_assignment(sides_arg(a, b, c, d), ground);
            Branch br = branch == "down" ? Branch::elbow_down : Branch::elbow_up;
            TraceReport rep = trace_cycle(asg, br, samples_per_turn);
            py::dict r;
            r["closed"] = rep.closed;
            r["cycle_period"] = rep.cycle_period;
            r["caustic_loops"] = rep.caustic_loops;
            r["fold_count"] = rep.fold_count;
            r["chirality"] = rep.chirality;
            r["n_samples"] = rep.samples.size();
            py::list evs;
            for (const GateEvent& e : rep.gate_events) {
                py::dict ev;
                ev["gate"] = std::string(1, e.gate);
                ev["theta"] = e.theta;
                ev["point"] = py::make_tuple(e.point.x, e.point.y);
                ev["fold"] = e.fold;
                ev["sample_index"] = e.sample_index;
                evs.append(ev);
            }
            r["gate_events"] = evs;
            return r;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("ground"),
        py::arg("branch") = "up", py::arg("samples_per_turn") = 720);

    m.def(
        "screen_csv",
        [](double a, double b, double c, double d, int resolution, bool normalized) {
            RenderSpec spec;
            spec.resolution = resolution;
            spec.normalized = normalized;
            std::ostringstream os;
            emit_csv(build_screen(sides_arg(a, b, c, d), spec), os);
            return os.str();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        py::arg("resolution") = 512, py::arg("normalized") = false);

    m.def(
        "screen_json",
        [](double a, double b, double c, double d, int resolution, bool normalized) {
            RenderSpec spec;
            spec.resolution = resolution;
            spec.normalized = normalized;
            return screen_json(build_screen(sides_arg(a, b, c, d), spec));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        py::arg("resolution") = 512, py::arg("normalized") = false);
}
