#include "linkscreen/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linkscreen/errors.hpp"

namespace linkscreen {

namespace {

constexpr double kRelTol = 1e-9;
const double kPi = std::acos(-1.0);

double sq(double v) { return v * v; }

int label_index(char c) {
    switch (c) {
        case 'a': return 0;
        case 'b': return 1;
        case 'c': return 2;
        case 'd': return 3;
    }
    throw input_error(std::string("unknown side label '") + c + "'; use a, b, c or d");
}

char label_of(int i) { return static_cast<char>('a' + i); }

// Side i spans vertices (i, i+1) of the quadrilateral cycle V_A..V_D.
int joint_vertex(int side1, int side2) {
    for (int v1 : {side1, (side1 + 1) % 4})
        for (int v2 : {side2, (side2 + 1) % 4})
            if (v1 == v2) return v1;
    throw input_error("sides are not adjacent");
}

struct P2Candidates {
    std::array<double, 2> P1, P3;
    std::array<double, 2> up, down;  // floating joint on each branch
    bool singular = false;           // branches coincide (circle tangency)
    bool concentric = false;         // fold continuum: any direction valid
};

double norm2(std::array<double, 2> v) { return std::sqrt(sq(v[0]) + sq(v[1])); }

std::array<double, 2> sub(std::array<double, 2> a, std::array<double, 2> b) {
    return {a[0] - b[0], a[1] - b[1]};
}

P2Candidates joint_candidates(const LinkageAssignment& asg, double theta) {
    double g = asg.ground_len, ai = asg.input_len;
    double h = asg.coupler_len, bo = asg.output_len;
    double scale = g + ai + h + bo;
    double tol = kRelTol * scale;

    P2Candidates pc;
    pc.P1 = {ai * std::cos(theta), ai * std::sin(theta)};
    pc.P3 = {g, 0};
    std::array<double, 2> d = sub(pc.P3, pc.P1);
    double f = norm2(d);

    if (f < std::fabs(h - bo) - tol || f > h + bo + tol)
        throw input_error("input angle outside the feasible range");

    if (f < tol) {
        // coincident pivots: the floating joint moves on a full circle
        pc.concentric = true;
        pc.singular = true;
        pc.up = pc.down = {pc.P1[0] + h, pc.P1[1]};
        return pc;
    }

    double t = (sq(f) + sq(h) - sq(bo)) / (2 * f);
    double m2 = sq(h) - sq(t);
    double m = std::sqrt(std::max(0.0, m2));
    std::array<double, 2> u{d[0] / f, d[1] / f};
    std::array<double, 2> perp{-u[1], u[0]};
    pc.up = {pc.P1[0] + t * u[0] + m * perp[0], pc.P1[1] + t * u[1] + m * perp[1]};
    pc.down = {pc.P1[0] + t * u[0] - m * perp[0], pc.P1[1] + t * u[1] - m * perp[1]};
    pc.singular = m <= 1e-7 * scale;
    return pc;
}

Configuration build_configuration(const LinkageAssignment& asg, double theta,
                                  const P2Candidates& pc, std::array<double, 2> P2,
                                  Branch branch) {
    Configuration cfg;
    cfg.theta = theta;
    cfg.branch = branch;
    cfg.singular = pc.singular;

    std::array<double, 2> P0{0, 0};
    int gi = label_index(asg.ground), ii = label_index(asg.input);
    int hi = label_index(asg.coupler), oi = label_index(asg.output);
    cfg.vertices[joint_vertex(gi, ii)] = P0;
    cfg.vertices[joint_vertex(ii, hi)] = pc.P1;
    cfg.vertices[joint_vertex(hi, oi)] = P2;
    cfg.vertices[joint_vertex(oi, gi)] = pc.P3;

    cfg.diagonals.x = norm2(sub(cfg.vertices[0], cfg.vertices[2]));
    cfg.diagonals.y = norm2(sub(cfg.vertices[1], cfg.vertices[3]));

    // shoelace around the loop ground -> output -> coupler -> input,
    // counterclockwise positive
    std::array<std::array<double, 2>, 4> loop{P0, pc.P3, P2, pc.P1};
    double area = 0;
    for (int i = 0; i < 4; ++i) {
        const auto& p = loop[i];
        const auto& q = loop[(i + 1) % 4];
        area += p[0] * q[1] - q[0] * p[1];
    }
    cfg.signed_area = area / 2;
    cfg.shape = shape_classify(cfg.vertices);
    return cfg;
}

}  // namespace

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::convex: return "convex";
        case Shape::concave: return "concave";
        case Shape::crossed: return "crossed";
        case Shape::degenerate: return "degenerate";
    }
    return "?";
}

LinkageAssignment make_assignment(const QuadSides& q, char ground,
                                  std::optional<char> input) {
    int gi = label_index(ground);
    int n1 = (gi + 1) % 4, n3 = (gi + 3) % 4;
    int ii;
    if (input) {
        ii = label_index(*input);
        if (ii != n1 && ii != n3)
            throw input_error("input link must be adjacent to the ground link");
    } else {
        ii = std::min(n1, n3);  // alphabetically first neighbor
    }
    LinkageAssignment asg;
    asg.sides = q;
    asg.ground = label_of(gi);
    asg.input = label_of(ii);
    asg.coupler = label_of((gi + 2) % 4);
    asg.output = label_of(ii == n1 ? n3 : n1);
    asg.ground_len = q[gi];
    asg.input_len = q[label_index(asg.input)];
    asg.coupler_len = q[label_index(asg.coupler)];
    asg.output_len = q[label_index(asg.output)];
    return asg;
}

Shape shape_classify(const std::array<std::array<double, 2>, 4>& v) {
    double perim = 0;
    for (int i = 0; i < 4; ++i) perim += norm2(sub(v[(i + 1) % 4], v[i]));
    double tol = kRelTol * sq(perim);

    int pos = 0, neg = 0;
    for (int i = 0; i < 4; ++i) {
        auto e1 = sub(v[(i + 1) % 4], v[i]);
        auto e2 = sub(v[(i + 2) % 4], v[(i + 1) % 4]);
        double cr = e1[0] * e2[1] - e1[1] * e2[0];
        if (std::fabs(cr) <= tol) return Shape::degenerate;
        (cr > 0 ? pos : neg)++;
    }
    if (pos == 4 || neg == 4) return Shape::convex;
    if (pos == 2) return Shape::crossed;
    return Shape::concave;
}

Configuration solve_position(const LinkageAssignment& asg, double theta, Branch branch) {
    P2Candidates pc = joint_candidates(asg, theta);
    if (pc.concentric) {
        // deterministic fold representative: coupler extends the input ray
        double ai = asg.input_len, h = asg.coupler_len;
        std::array<double, 2> dir{pc.P1[0] / ai, pc.P1[1] / ai};
        std::array<double, 2> P2{pc.P1[0] + h * dir[0], pc.P1[1] + h * dir[1]};
        return build_configuration(asg, theta, pc, P2, branch);
    }
    return build_configuration(asg, theta, pc,
                               branch == Branch::elbow_up ? pc.up : pc.down, branch);
}

AngleLimits input_angle_limits(const LinkageAssignment& asg) {
    double g = asg.ground_len, ai = asg.input_len;
    double h = asg.coupler_len, bo = asg.output_len;
    double scale = g + ai + h + bo;
    double tol = kRelTol * scale;

    AngleLimits lim;
    lim.includes_zero = std::fabs(g - ai) >= std::fabs(h - bo) - tol;
    lim.includes_pi = g + ai <= h + bo + tol;

    double c_hi = (sq(g) + sq(ai) - sq(h + bo)) / (2 * g * ai);
    double c_lo = (sq(g) + sq(ai) - sq(h - bo)) / (2 * g * ai);
    c_hi = std::clamp(c_hi, -1.0, 1.0);
    c_lo = std::clamp(c_lo, -1.0, 1.0);

    if (lim.includes_zero && lim.includes_pi) {
        lim.movement = Movement::crank;
        lim.theta_lo = 0;
        lim.theta_hi = 2 * kPi;
    } else if (lim.includes_zero) {
        lim.movement = Movement::zero_rocker;
        lim.theta_hi = std::acos(c_hi);
        lim.theta_lo = -lim.theta_hi;
    } else if (lim.includes_pi) {
        lim.movement = Movement::pi_rocker;
        lim.theta_lo = std::acos(c_lo);
        lim.theta_hi = 2 * kPi - lim.theta_lo;
    } else {
        lim.movement = Movement::rocker;
        lim.theta_lo = std::acos(c_lo);
        lim.theta_hi = std::acos(c_hi);
    }
    return lim;
}

MovementTypes movement_types(const LinkageAssignment& asg) {
    MovementTypes mt;
    mt.input = input_angle_limits(asg).movement;
    LinkageAssignment rev = make_assignment(asg.sides, asg.ground, asg.output);
    mt.output = input_angle_limits(rev).movement;

    // Catalog comparison in the grounding's own labeling: read the sides
    // cyclically as (ground, output, coupler, input). The catalog's third
    // sign column and the output movement are stated with the angle origin
    // on the far ground pivot, so v flips and the output's excluded angles
    // (0 vs pi) swap relative to the per-link analysis above.
    QuadSides role = make_sides(asg.ground_len, asg.output_len, asg.coupler_len,
                                asg.input_len);
    CaseReport raw = classify_case(role);
    CaseReport expected =
        case_for_signs(raw.signs[0], raw.signs[1], -raw.signs[2]);
    auto swap_0_pi = [](Movement m) {
        return m == Movement::zero_rocker ? Movement::pi_rocker
               : m == Movement::pi_rocker ? Movement::zero_rocker
                                          : m;
    };
    mt.matches_case_table = mt.input == expected.input_movement &&
                            mt.output == swap_0_pi(expected.output_movement);
    return mt;
}

namespace {

// Branch continuation: candidate closest to the quadratic extrapolation of
// the floating joint (falls back to velocity / position for short history).
std::array<double, 2> predict(const std::vector<Configuration>& path,
                              const LinkageAssignment& asg) {
    int hi_idx = label_index(asg.coupler), oi = label_index(asg.output);
    int pv = joint_vertex(hi_idx, oi);
    size_t n = path.size();
    auto at = [&](size_t k) { return path[n - 1 - k].vertices[pv]; };
    if (n >= 3) {
        auto p0 = at(0), p1 = at(1), p2 = at(2);
        return {3 * p0[0] - 3 * p1[0] + p2[0], 3 * p0[1] - 3 * p1[1] + p2[1]};
    }
    if (n == 2) {
        auto p0 = at(0), p1 = at(1);
        return {2 * p0[0] - p1[0], 2 * p0[1] - p1[1]};
    }
    return at(0);
}

Configuration solve_continuing(const LinkageAssignment& asg, double theta,
                               std::array<double, 2> pred) {
    P2Candidates pc = joint_candidates(asg, theta);
    std::array<double, 2> P2;
    Branch br;
    if (pc.concentric) {
        std::array<double, 2> d = sub(pred, pc.P1);
        double n = norm2(d);
        if (n < 1e-300) d = {1, 0}, n = 1;
        P2 = {pc.P1[0] + asg.coupler_len * d[0] / n,
              pc.P1[1] + asg.coupler_len * d[1] / n};
        br = Branch::elbow_up;
    } else {
        double du = norm2(sub(pc.up, pred)), dd = norm2(sub(pc.down, pred));
        br = du <= dd ? Branch::elbow_up : Branch::elbow_down;
        P2 = du <= dd ? pc.up : pc.down;
    }
    return build_configuration(asg, theta, pc, P2, br);
}

double wrap_tau(double t) {
    double tau = 2 * kPi;
    t = std::fmod(t, tau);
    return t < 0 ? t + tau : t;
}

struct DiagBands {
    double x_lo, x_hi, y_lo, y_hi;
};

// Golden-section refinement of an extremum of one diagonal along the
// continued path inside (ta, tb).
double refine_extremum(const LinkageAssignment& asg, double ta, double tb,
                       std::array<double, 2> ref, bool use_x, bool maximize) {
    auto value = [&](double t) {
        Configuration c = solve_continuing(asg, t, ref);
        double v = use_x ? c.diagonals.x : c.diagonals.y;
        return maximize ? -v : v;
    };
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double lo = ta, hi = tb;
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = value(c1), f2 = value(c2);
    for (int i = 0; i < 60 && hi - lo > 1e-12; ++i) {
        if (f1 < f2) {
            hi = c2, c2 = c1, f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = value(c1);
        } else {
            lo = c1, c1 = c2, f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = value(c2);
        }
    }
    return (lo + hi) / 2;
}

}  // namespace

TraceReport trace_cycle(const LinkageAssignment& asg, Branch start, int samples_per_turn) {
    if (samples_per_turn < 16)
        throw input_error("samples_per_turn must be at least 16");

    double scale = asg.ground_len + asg.input_len + asg.coupler_len + asg.output_len;
    AngleLimits lim = input_angle_limits(asg);
    double delta = 2 * kPi / samples_per_turn;

    TraceReport rep;
    rep.assignment = asg;

    // pick a non-singular start angle
    bool is_crank = lim.movement == Movement::crank;
    double mid = is_crank ? kPi / 2 : (lim.theta_lo + lim.theta_hi) / 2;
    double span = is_crank ? 2 * kPi : lim.theta_hi - lim.theta_lo;
    double theta0 = mid;
    for (double frac : {0.0, 0.11, -0.11, 0.23, -0.23, 0.37}) {
        double cand = mid + frac * span / 2;
        try {
            if (!joint_candidates(asg, cand).singular) {
                theta0 = cand;
                break;
            }
        } catch (const input_error&) {
        }
    }

    // monotone sweep segments between closed-form reversal angles
    struct Seg {
        double from, to;
    };
    std::vector<Seg> segs;
    if (is_crank) {
        segs.push_back({theta0, theta0 + 2 * kPi});
    } else {
        segs.push_back({theta0, lim.theta_hi});
        segs.push_back({lim.theta_hi, lim.theta_lo});
        segs.push_back({lim.theta_lo, theta0});
    }

    rep.samples.push_back(solve_position(asg, theta0, start));

    double close_tol = 1e-6 * scale;
    int hi_idx = label_index(asg.coupler), oi = label_index(asg.output);
    int pv = joint_vertex(hi_idx, oi);
    int extra_turns = 2;  // folding cranks re-close only after further turns

    auto matches_start = [&](const Configuration& c) {
        return norm2(sub(c.vertices[pv], rep.samples[0].vertices[pv])) < close_tol &&
               std::fabs(wrap_tau(c.theta) - wrap_tau(theta0)) < delta / 2;
    };

    for (size_t si = 0; si < segs.size(); ++si) {
        double from = segs[si].from, to = segs[si].to;
        double dir = to >= from ? 1.0 : -1.0;
        double len = std::fabs(to - from);
        int n = static_cast<int>(std::floor(len / delta - 0.125));
        for (int k = 1; k <= n; ++k) {
            double t = from + dir * k * delta;
            rep.samples.push_back(solve_continuing(asg, t, predict(rep.samples, asg)));
        }
        Configuration c = solve_continuing(asg, to, predict(rep.samples, asg));
        if (si + 1 < segs.size()) {
            rep.samples.push_back(c);  // reversal sample, angle exact
            continue;
        }
        if (matches_start(c)) {
            rep.closed = true;
        } else if (is_crank && extra_turns > 0) {
            rep.samples.push_back(c);
            segs.push_back({to, to + dir * 2 * kPi});
            --extra_turns;
        }
    }

    // gate events: local extrema of each diagonal, refined onto the band edges
    ScreenBounds bounds = screen_bounds(asg.sides);
    int n = static_cast<int>(rep.samples.size());
    double gate_tol = 1e-6 * scale;
    auto diag_val = [&](int k, bool use_x) {
        return use_x ? rep.samples[k].diagonals.x : rep.samples[k].diagonals.y;
    };
    auto cyc_dist = [n](int i, int j) {
        int d = std::abs(i - j);
        return std::min(d, n - d);
    };

    for (bool use_x : {true, false}) {
        double lo_edge = use_x ? bounds.x_min : bounds.y_min;
        double hi_edge = use_x ? bounds.x_max : bounds.y_max;
        int last_hit = -10;
        char last_gate = 0;
        for (int k = 0; k < n; ++k) {
            int km = (k + n - 1) % n, kp = (k + 1) % n;
            if (!rep.closed && (k == 0 || k + 1 == n)) continue;
            double d0 = diag_val(k, use_x) - diag_val(km, use_x);
            double d1 = diag_val(kp, use_x) - diag_val(k, use_x);
            if (d0 * d1 > 0) continue;
            bool maximize = d0 > 0 || d1 < 0;

            // unwrap the window around sample k; refine only when the input
            // angle moves monotonically through it (not across a reversal)
            double t_k = rep.samples[k].theta;
            double t_km = rep.samples[km].theta, t_kp = rep.samples[kp].theta;
            while (t_km - t_k > kPi) t_km -= 2 * kPi;
            while (t_k - t_km > kPi) t_km += 2 * kPi;
            while (t_kp - t_k > kPi) t_kp -= 2 * kPi;
            while (t_k - t_kp > kPi) t_kp += 2 * kPi;
            bool mono = (t_km < t_k && t_k < t_kp) || (t_km > t_k && t_k > t_kp);

            double tstar = t_k;
            Configuration cfg = rep.samples[k];
            if (mono && !rep.samples[k].singular) {
                double ta = std::min(t_km, t_kp), tb = std::max(t_km, t_kp);
                tstar = refine_extremum(asg, ta, tb, rep.samples[k].vertices[pv],
                                        use_x, maximize);
                cfg = solve_continuing(asg, tstar, rep.samples[k].vertices[pv]);
            }
            double v = use_x ? cfg.diagonals.x : cfg.diagonals.y;
            char gate = 0;
            if (std::fabs(v - lo_edge) < gate_tol)
                gate = use_x ? 'W' : 'S';
            else if (std::fabs(v - hi_edge) < gate_tol)
                gate = use_x ? 'E' : 'N';
            if (!gate) continue;
            if (gate == last_gate && cyc_dist(k, last_hit) <= 3) {
                last_hit = k;
                continue;  // same touch seen from an adjacent sample
            }
            last_hit = k;
            last_gate = gate;

            GateEvent ev;
            ev.theta = tstar;
            ev.gate = gate;
            ev.point = cfg.diagonals;
            ev.sample_index = k;
            rep.gate_events.push_back(ev);
        }
    }

    // path order; folds are clusters of different gates at one path point
    std::sort(rep.gate_events.begin(), rep.gate_events.end(),
              [](const GateEvent& a, const GateEvent& b) {
                  return a.sample_index < b.sample_index;
              });
    for (size_t i = 0; i < rep.gate_events.size(); ++i)
        for (size_t j = i + 1; j < rep.gate_events.size(); ++j)
            if (cyc_dist(rep.gate_events[i].sample_index,
                         rep.gate_events[j].sample_index) <= 3 &&
                rep.gate_events[i].gate != rep.gate_events[j].gate) {
                rep.gate_events[i].fold = rep.gate_events[j].fold = true;
            }
    for (size_t i = 0; i < rep.gate_events.size(); ++i) {
        if (!rep.gate_events[i].fold) continue;
        if (i > 0 && rep.gate_events[i - 1].fold &&
            cyc_dist(rep.gate_events[i].sample_index,
                     rep.gate_events[i - 1].sample_index) <= 3)
            continue;  // same cluster
        ++rep.fold_count;
    }

    // caustic loop count: contacts of the driven diagonal with its far edge
    bool f_is_x = [&] {
        int ii = label_index(asg.input);
        int v1 = joint_vertex(ii, hi_idx), v2 = joint_vertex(oi, label_index(asg.ground));
        return (v1 == 0 && v2 == 2) || (v1 == 2 && v2 == 0);
    }();
    char far_gate = f_is_x ? 'E' : 'N';
    for (const GateEvent& e : rep.gate_events)
        if (e.gate == far_gate) ++rep.caustic_loops;
    if (rep.caustic_loops == 0 && rep.closed) rep.caustic_loops = 1;
    rep.cycle_period = 2 * kPi * rep.caustic_loops;

    // chirality profile over non-degenerate samples
    bool pos = false, neg = false;
    for (const Configuration& c : rep.samples) {
        if (std::fabs(c.signed_area) <= kRelTol * sq(scale)) continue;
        (c.signed_area > 0 ? pos : neg) = true;
    }
    rep.chirality = pos && neg ? 0 : pos ? 1 : neg ? -1 : 0;
    return rep;
}

}  // namespace linkscreen
