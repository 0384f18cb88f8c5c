#include "linkscreen/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkscreen/classify.hpp"
#include "linkscreen/errors.hpp"
#include "linkscreen/geometry.hpp"
#include "linkscreen/kinematics.hpp"
#include "linkscreen/screen.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace linkscreen {

namespace {

double jnum(double v) {
    return std::strtod(format_g12(v).c_str(), nullptr);
}

void write_file(const fs::path& dir, const std::string& name,
                const std::string& content, std::ostream& out) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create directory " + dir.string());
    fs::path p = dir / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw io_error("cannot open " + p.string());
    f << content;
    f.flush();
    if (!f) throw io_error("write failed on " + p.string());
    out << "wrote " << p.string() << "\n";
}

struct SideArgs {
    double a = 0, b = 0, c = 0, d = 0;
    bool no_canonical = false;
    std::string out_dir;

    void attach(CLI::App* sc) {
        sc->add_option("a", a, "side a")->required();
        sc->add_option("b", b, "side b (adjacent to a)")->required();
        sc->add_option("c", c, "side c (opposite a)")->required();
        sc->add_option("d", d, "side d")->required();
        sc->add_flag("--no-canonical", no_canonical,
                     "suppress the canonical-labeling note");
        sc->add_option("--out", out_dir, "directory to write result files into");
    }

    QuadSides sides(std::ostream& out) const {
        QuadSides q = make_sides(a, b, c, d);
        if (!no_canonical && !is_canonical_order(q)) {
            QuadSides k = canonicalize(a, b, c, d);
            out << "note: canonical labeling is a=" << format_g12(k.a)
                << " b=" << format_g12(k.b) << " c=" << format_g12(k.c)
                << " d=" << format_g12(k.d) << "\n";
        }
        return q;
    }
};

std::string sign_glyphs(const std::array<int, 3>& s) {
    std::string g;
    for (int v : s) g += v < 0 ? '-' : v > 0 ? '+' : '0';
    return g;
}

ordered_json sides_json(const QuadSides& q) {
    return {{"a", jnum(q.a)}, {"b", jnum(q.b)}, {"c", jnum(q.c)}, {"d", jnum(q.d)}};
}

ordered_json classify_json(const QuadSides& q) {
    ReggeVariables rv = regge_variables(q);
    CaseReport cr = classify_case(q);
    GrashofReport gr = grashof_test(q);
    SignLawReport law = conjugation_sign_law(q);
    ordered_json j;
    j["sides"] = sides_json(q);
    j["regge"] = {{"s", jnum(rv.s)}, {"r", jnum(rv.r)}, {"u", jnum(rv.u)},
                  {"v", jnum(rv.v)},
                  {"t", {jnum(rv.t0), jnum(rv.t1), jnum(rv.t2), jnum(rv.t3)}}};
    j["signs"] = cr.signs;
    j["case"] = cr.id;
    j["input_movement"] = movement_name(cr.input_movement);
    j["output_movement"] = movement_name(cr.output_movement);
    j["regge_symmetric"] = cr.regge_symmetric;
    j["grashof"] = {{"satisfied", gr.satisfied}, {"boundary", gr.boundary},
                    {"s", jnum(gr.s_len)}, {"l", jnum(gr.l_len)},
                    {"p", jnum(gr.p_len)}, {"q", jnum(gr.q_len)}};
    QuadSides cj = regge_conjugate(q);
    j["conjugate"] = sides_json(cj);
    j["sign_law"] = {{"negated", law.negated},
                     {"grashof_flipped", law.grashof_flipped}};
    return j;
}

int cmd_classify(const SideArgs& sa, const std::string& format, std::ostream& out) {
    QuadSides q = sa.sides(out);
    ordered_json j = classify_json(q);
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else {
        ReggeVariables rv = regge_variables(q);
        CaseReport cr = classify_case(q);
        GrashofReport gr = grashof_test(q);
        out << "sides: a=" << format_g12(q.a) << " b=" << format_g12(q.b)
            << " c=" << format_g12(q.c) << " d=" << format_g12(q.d) << "\n";
        out << "regge: s=" << format_g12(rv.s) << " r=" << format_g12(rv.r)
            << " u=" << format_g12(rv.u) << " v=" << format_g12(rv.v) << "\n";
        out << "signs: (" << sign_glyphs(cr.signs) << ")\n";
        out << "case: " << cr.id << "\n";
        out << "movement (catalog): input " << movement_name(cr.input_movement)
            << ", output " << movement_name(cr.output_movement) << "\n";
        out << "grashof: "
            << (gr.boundary ? "boundary"
                            : gr.satisfied ? "satisfied" : "not satisfied")
            << " (" << format_g12(gr.s_len) << " + " << format_g12(gr.l_len)
            << " vs " << format_g12(gr.p_len) << " + " << format_g12(gr.q_len)
            << ")\n";
        out << "regge symmetric: " << (cr.regge_symmetric ? "yes" : "no") << "\n";
        QuadSides cj = regge_conjugate(q);
        out << "conjugate: a=" << format_g12(cj.a) << " b=" << format_g12(cj.b)
            << " c=" << format_g12(cj.c) << " d=" << format_g12(cj.d) << "\n";
    }
    if (!sa.out_dir.empty())
        write_file(sa.out_dir, "classify.json", j.dump(2) + "\n", out);
    return 0;
}

void print_band_lines(const ScreenBounds& b, std::ostream& out) {
    out << "x in [" << format_g12(b.x_min) << ", " << format_g12(b.x_max) << "]\n";
    out << "y in [" << format_g12(b.y_min) << ", " << format_g12(b.y_max) << "]\n";
}

void print_coalescences(const std::vector<std::string>& cs, std::ostream& out) {
    out << "coalescences:";
    if (cs.empty())
        out << " none";
    else
        for (const std::string& c : cs) out << ' ' << c;
    out << "\n";
}

ordered_json gates_json(const QuadSides& q, const ScreenGeometry& g) {
    GateContacts gc = gate_contacts(q);
    auto pt = [](const std::array<double, 2>& p) {
        return ordered_json::array({jnum(p[0]), jnum(p[1])});
    };
    ordered_json j;
    j["sides"] = sides_json(q);
    j["bounds"] = {{"x_min", jnum(g.bounds.x_min)}, {"x_max", jnum(g.bounds.x_max)},
                   {"y_min", jnum(g.bounds.y_min)}, {"y_max", jnum(g.bounds.y_max)}};
    j["gates"] = {{"y_W", jnum(g.gate_values.y_W)}, {"y_E", jnum(g.gate_values.y_E)},
                  {"x_S", jnum(g.gate_values.x_S)}, {"x_N", jnum(g.gate_values.x_N)}};
    j["contacts"] = {{"N", pt(gc.N)}, {"S", pt(gc.S)}, {"E", pt(gc.E)}, {"W", pt(gc.W)}};
    if (gc.W2) j["contacts"]["W2"] = pt(*gc.W2);
    if (gc.S2) j["contacts"]["S2"] = pt(*gc.S2);
    j["coalescences"] = g.coalescences;
    return j;
}

int cmd_gates(const SideArgs& sa, const std::string& format, std::ostream& out) {
    QuadSides q = sa.sides(out);
    RenderSpec spec;
    spec.resolution = 2;  // gates only; skip dense sampling
    ScreenGeometry g = build_screen(q, spec);
    ordered_json j = gates_json(q, g);
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else {
        print_band_lines(g.bounds, out);
        out << "gates: y_W=" << format_g12(g.gate_values.y_W)
            << " y_E=" << format_g12(g.gate_values.y_E)
            << " x_S=" << format_g12(g.gate_values.x_S)
            << " x_N=" << format_g12(g.gate_values.x_N) << "\n";
        GateContacts gc = gate_contacts(q);
        auto pp = [&](const char* n, const std::array<double, 2>& p) {
            out << ' ' << n << "=(" << format_g12(p[0]) << ", " << format_g12(p[1])
                << ")";
        };
        out << "contacts:";
        pp("N", gc.N);
        pp("S", gc.S);
        pp("E", gc.E);
        pp("W", gc.W);
        if (gc.W2) pp("W2", *gc.W2);
        if (gc.S2) pp("S2", *gc.S2);
        out << "\n";
        print_coalescences(g.coalescences, out);
    }
    if (!sa.out_dir.empty())
        write_file(sa.out_dir, "gates.json", j.dump(2) + "\n", out);
    return 0;
}

void emit_screen_files(const ScreenGeometry& g, const std::string& dir,
                       const std::string& stem, const std::string& format,
                       std::ostream& out) {
    if (dir.empty()) return;
    if (format == "csv" || format == "all") {
        std::ostringstream os;
        emit_csv(g, os);
        write_file(dir, stem + ".csv", os.str(), out);
    }
    if (format == "svg" || format == "all") {
        std::ostringstream os;
        emit_svg(g, os);
        write_file(dir, stem + ".svg", os.str(), out);
    }
    if (format == "json" || format == "all")
        write_file(dir, stem + ".json", screen_json(g), out);
}

int cmd_screen(const SideArgs& sa, int resolution, bool normalized,
               const std::string& format, std::ostream& out) {
    QuadSides q = sa.sides(out);
    RenderSpec spec;
    spec.resolution = resolution;
    spec.normalized = normalized;
    ScreenGeometry g = build_screen(q, spec);
    print_band_lines(g.bounds, out);
    out << "square assumption: "
        << (g.bounds.square_assumption_holds ? "holds" : "fails") << "\n";
    out << "piero line: " << (g.piero_line ? "yes" : "no") << "\n";
    print_coalescences(g.coalescences, out);
    emit_screen_files(g, sa.out_dir, "screen", format, out);
    return 0;
}

ordered_json trace_json(const TraceReport& rep, const MovementTypes& mv) {
    ordered_json j;
    j["sides"] = sides_json(rep.assignment.sides);
    j["ground"] = std::string(1, rep.assignment.ground);
    j["input"] = std::string(1, rep.assignment.input);
    j["coupler"] = std::string(1, rep.assignment.coupler);
    j["output"] = std::string(1, rep.assignment.output);
    j["input_movement"] = movement_name(mv.input);
    j["output_movement"] = movement_name(mv.output);
    j["matches_case_table"] = mv.matches_case_table;
    j["closed"] = rep.closed;
    j["cycle_period"] = jnum(rep.cycle_period);
    j["caustic_loops"] = rep.caustic_loops;
    j["fold_count"] = rep.fold_count;
    j["chirality"] = rep.chirality;
    ordered_json evs = ordered_json::array();
    for (const GateEvent& e : rep.gate_events)
        evs.push_back({{"gate", std::string(1, e.gate)},
                       {"theta", jnum(e.theta)},
                       {"point", {jnum(e.point.x), jnum(e.point.y)}},
                       {"fold", e.fold},
                       {"sample_index", e.sample_index}});
    j["gate_events"] = evs;
    ordered_json samples = ordered_json::array();
    for (const Configuration& c : rep.samples)
        samples.push_back({jnum(c.theta), jnum(c.diagonals.x), jnum(c.diagonals.y),
                           jnum(c.signed_area)});
    j["samples"] = samples;
    return j;
}

int cmd_trace(const SideArgs& sa, const std::string& ground,
              const std::string& input, const std::string& branch,
              int samples_per_turn, int resolution, bool normalized,
              const std::string& format, std::ostream& out) {
    QuadSides q = sa.sides(out);
    std::optional<char> in_link;
    if (!input.empty()) in_link = input[0];
    LinkageAssignment asg = make_assignment(q, ground[0], in_link);
    Branch b = branch == "down" ? Branch::elbow_down : Branch::elbow_up;
    TraceReport rep = trace_cycle(asg, b, samples_per_turn);
    MovementTypes mv = movement_types(asg);

    out << "ground " << asg.ground << ": input " << asg.input << " ("
        << movement_name(mv.input) << "), output " << asg.output << " ("
        << movement_name(mv.output) << ")\n";
    out << "case table: " << (mv.matches_case_table ? "agrees" : "disagrees")
        << "\n";
    out << "samples: " << rep.samples.size() << " ("
        << (rep.closed ? "closed" : "open") << ")\n";
    out << "cycle period: " << 2 * rep.caustic_loops << "pi ("
        << rep.caustic_loops
        << (rep.caustic_loops == 1 ? " caustic loop)" : " caustic loops)")
        << "\n";
    out << "chirality: "
        << (rep.chirality > 0 ? "+1" : rep.chirality < 0 ? "-1" : "alternating")
        << "\n";
    out << "folds: " << rep.fold_count << "\n";
    for (const GateEvent& e : rep.gate_events)
        out << "gate " << e.gate << " at theta=" << format_g12(e.theta) << " ("
            << format_g12(e.point.x) << ", " << format_g12(e.point.y) << ")"
            << (e.fold ? " fold" : "") << "\n";

    if (!sa.out_dir.empty()) {
        RenderSpec spec;
        spec.resolution = resolution;
        spec.normalized = normalized;
        ScreenGeometry g = build_screen(q, spec);
        attach_trace(g, rep);
        write_file(sa.out_dir, "trace.json", trace_json(rep, mv).dump(2) + "\n",
                   out);
        if (format == "csv" || format == "all") {
            std::ostringstream os;
            emit_csv(g, os);
            write_file(sa.out_dir, "trace.csv", os.str(), out);
        }
        if (format == "svg" || format == "all") {
            std::ostringstream os;
            emit_svg(g, os);
            write_file(sa.out_dir, "trace.svg", os.str(), out);
        }
    }
    return 0;
}

ordered_json orbit_json(const SixTuple& seed,
                        const std::vector<OrbitEntry>& orbit) {
    ordered_json j;
    ordered_json sym = ordered_json::array();
    for (double v : seed.v) sym.push_back(jnum(v));
    j["symbol"] = sym;
    j["size"] = orbit.size();
    size_t feasible = 0;
    for (const OrbitEntry& e : orbit) feasible += e.feasible;
    j["feasible_count"] = feasible;
    ordered_json members = ordered_json::array();
    for (const OrbitEntry& e : orbit) {
        ordered_json m = ordered_json::array();
        for (double v : e.symbol.v) m.push_back(jnum(v));
        members.push_back({{"symbol", m}, {"feasible", e.feasible}});
    }
    j["members"] = members;
    return j;
}

int cmd_orbit(const SideArgs& sa, std::optional<double> ox,
              std::optional<double> oy, bool full, std::ostream& out) {
    QuadSides q = sa.sides(out);
    ScreenBounds b = screen_bounds(q);
    double x = ox ? *ox : (b.x_min + b.x_max) / 2;
    double y = oy ? *oy : ridge_y(q, x);
    SixTuple seed{{q.a, q.b, x, q.c, q.d, y}};
    std::vector<OrbitEntry> orbit = symmetry_orbit(seed);
    ordered_json j = orbit_json(seed, orbit);
    if (full) {
        out << j.dump(2) << "\n";
    } else {
        out << "symbol: a=" << format_g12(q.a) << " b=" << format_g12(q.b)
            << " x=" << format_g12(x) << " / c=" << format_g12(q.c)
            << " d=" << format_g12(q.d) << " y=" << format_g12(y) << "\n";
        out << "orbit size: " << orbit.size() << "\n";
        out << "feasible members: " << j["feasible_count"].get<size_t>() << "\n";
    }
    if (!sa.out_dir.empty())
        write_file(sa.out_dir, "orbit.json", j.dump(2) + "\n", out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"diagonal-space screens, Regge symmetry, and four-bar cycles"};
    app.require_subcommand(1);

    SideArgs cl_args, sc_args, ga_args, tr_args, or_args;
    std::string cl_format = "text", ga_format = "text";
    std::string sc_format = "all", tr_format = "all";
    int sc_resolution = 512, tr_resolution = 512;
    bool sc_normalized = false, tr_normalized = false;
    std::string tr_ground, tr_input, tr_branch = "up";
    int tr_spt = 720;
    double or_x = 0, or_y = 0;
    bool or_full = false;

    CLI::App* cl = app.add_subcommand(
        "classify", "Regge variables, sign case, movement catalog, Grashof");
    cl_args.attach(cl);
    cl->add_option("--format", cl_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* sc = app.add_subcommand(
        "screen", "caustic, ridges, and gates of the diagonal screen");
    sc_args.attach(sc);
    sc->add_option("--resolution", sc_resolution, "samples per axis")
        ->check(CLI::PositiveNumber);
    sc->add_flag("--normalized", sc_normalized, "map into the unit square");
    sc->add_option("--format", sc_format, "csv, svg, json, or all")
        ->check(CLI::IsMember({"csv", "svg", "json", "all"}));

    CLI::App* ga = app.add_subcommand("gates", "band-edge contacts and coalescences");
    ga_args.attach(ga);
    ga->add_option("--format", ga_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* tr = app.add_subcommand(
        "trace", "drive one link through its full cycle on the screen");
    tr_args.attach(tr);
    tr->add_option("--ground", tr_ground, "grounded side")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    tr->add_option("--input", tr_input, "driven neighbor of the ground")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    tr->add_option("--branch", tr_branch, "starting elbow branch")
        ->check(CLI::IsMember({"up", "down"}));
    tr->add_option("--samples-per-turn", tr_spt, "trace sampling density")
        ->check(CLI::Range(16, 1000000));
    tr->add_option("--resolution", tr_resolution, "screen samples per axis")
        ->check(CLI::PositiveNumber);
    tr->add_flag("--normalized", tr_normalized, "map into the unit square");
    tr->add_option("--format", tr_format, "csv, svg, or all")
        ->check(CLI::IsMember({"csv", "svg", "all"}));

    CLI::App* orb = app.add_subcommand(
        "orbit", "symmetry orbit of the two-row symbol (a b x / c d y)");
    or_args.attach(orb);
    CLI::Option* ox = orb->add_option("--x", or_x, "diagonal x (default: band middle)");
    CLI::Option* oy = orb->add_option("--y", or_y, "diagonal y (default: ridge at x)");
    orb->add_flag("--full", or_full, "print every orbit member");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cl->parsed()) return cmd_classify(cl_args, cl_format, out);
        if (sc->parsed())
            return cmd_screen(sc_args, sc_resolution, sc_normalized, sc_format, out);
        if (ga->parsed()) return cmd_gates(ga_args, ga_format, out);
        if (tr->parsed())
            return cmd_trace(tr_args, tr_ground, tr_input, tr_branch, tr_spt,
                             tr_resolution, tr_normalized, tr_format, out);
        if (orb->parsed())
            return cmd_orbit(or_args,
                             ox->count() ? std::optional<double>(or_x) : std::nullopt,
                             oy->count() ? std::optional<double>(or_y) : std::nullopt,
                             or_full, out);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace linkscreen
