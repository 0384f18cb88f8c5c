#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linkscreen/classify.hpp"
#include "linkscreen/geometry.hpp"

namespace linkscreen {

// Grounding of a quadrilateral loop: which labeled side is fixed and
// which neighbor drives. Coupler is the side opposite the ground; the
// output is the ground's other neighbor. Joint frame: the ground lies on
// the +x axis with the ground∧input pivot at the origin.
struct LinkageAssignment {
    QuadSides sides;
    char ground = 'b';
    char input = 'a';
    char coupler = 'd';
    char output = 'c';
    double ground_len = 0, input_len = 0, coupler_len = 0, output_len = 0;
};

// ground in {a,b,c,d}; input must be cyclically adjacent to it (defaults
// to the alphabetically first neighbor).
LinkageAssignment make_assignment(const QuadSides& q, char ground,
                                  std::optional<char> input = std::nullopt);

enum class Branch { elbow_up, elbow_down };

enum class Shape { convex, concave, crossed, degenerate };

const char* shape_name(Shape s);

// A solved position. Vertices are the quadrilateral corners in label
// order (a∧d, a∧b, b∧c, c∧d corners = V_A..V_D), so diagonals.x spans
// V_A V_C and diagonals.y spans V_B V_D regardless of grounding.
struct Configuration {
    double theta = 0;                       // input angle, radians
    std::array<std::array<double, 2>, 4> vertices{};  // V_A, V_B, V_C, V_D
    DiagonalPair diagonals;
    double signed_area = 0;   // shoelace, counterclockwise positive
    Shape shape = Shape::degenerate;
    Branch branch = Branch::elbow_up;
    bool singular = false;    // circles tangent: branches coincide here
};

// Circle intersection for the floating joint; elbow-up takes the branch
// with positive cross product seen from the input tip. Throws input_error
// when theta is outside the feasible range.
Configuration solve_position(const LinkageAssignment& asg, double theta, Branch branch);

// Feasible input angle set, from the coupler-side triangle constraints
//   |coupler - output| <= f(theta) <= coupler + output.
struct AngleLimits {
    bool includes_zero = false;  // |g - a| >= |h - b|
    bool includes_pi = false;    // g + a <= h + b
    Movement movement = Movement::crank;
    // arc [theta_lo, theta_hi] of feasible angles (with its reflection
    // across the ground line when not a full circle); full circle for
    // cranks, represented as [0, 2*pi]
    double theta_lo = 0, theta_hi = 0;
};

AngleLimits input_angle_limits(const LinkageAssignment& asg);

// Movement types of both ground-adjacent links (input analysis applied to
// each end of the ground).
struct MovementTypes {
    Movement input = Movement::crank;
    Movement output = Movement::crank;
    bool matches_case_table = false;  // agrees with the classify_case catalog row
};

MovementTypes movement_types(const LinkageAssignment& asg);

// Convexity class from the four consecutive cross products; degenerate
// when any corner is collinear within tolerance.
Shape shape_classify(const std::array<std::array<double, 2>, 4>& vertices);

struct GateEvent {
    double theta = 0;
    char gate = '?';                 // 'N', 'S', 'E', 'W'
    DiagonalPair point;
    bool fold = false;               // two gates fire here: full collapse
    int sample_index = 0;            // position along TraceReport::samples
};

struct TraceReport {
    LinkageAssignment assignment;
    std::vector<Configuration> samples;   // closed path, last != first
    std::vector<GateEvent> gate_events;   // in path order
    double cycle_period = 0;              // 2*pi * caustic loops
    int caustic_loops = 0;
    int fold_count = 0;
    // +1 / -1 when every non-degenerate sample has that chirality, else 0
    int chirality = 0;
    bool closed = false;
};

// Follows the configuration path from a start on the requested branch
// until the initial configuration recurs. Branch continuity is by
// minimal joint displacement; at fold singularities the continuation
// minimizes the second difference of the floating joint. Rocker limits
// are located in closed form; gate events are refined to the band edges.
TraceReport trace_cycle(const LinkageAssignment& asg, Branch start,
                        int samples_per_turn = 720);

}  // namespace linkscreen
