// Independent reference computations used by the tests.  Everything here is
// deliberately written from first principles (determinants, coordinates,
// bisection) rather than calling into the library under test.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>

namespace oracle {

// Cayley-Menger determinant for four points.  Arguments are squared
// distances (AB2 = |AB|^2, ...).  The value equals 288 V^2 for the
// tetrahedron ABCD, and vanishes exactly when the four points are coplanar.
inline double cm_det(double AB2, double AC2, double AD2,
                     double BC2, double BD2, double CD2) {
    double m[5][5] = {
        {0.0, 1.0, 1.0, 1.0, 1.0},
        {1.0, 0.0, AB2, AC2, AD2},
        {1.0, AB2, 0.0, BC2, BD2},
        {1.0, AC2, BC2, 0.0, CD2},
        {1.0, AD2, BD2, CD2, 0.0},
    };
    double det = 1.0;
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 5; ++r) {
            double f = m[r][col] / m[col][col];
            for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Same determinant expressed in quadrilateral terms: sides a,b,c,d in cyclic
// order, diagonals x (between the a/b and c/d corners) and y (the other one).
inline double cm_det_quad(double a, double b, double c, double d,
                          double x, double y) {
    return cm_det(a * a, x * x, d * d, b * b, y * y, c * c);
}

// Coordinate construction of the planar quadrilateral: put the x diagonal on
// the axis and intersect the two triangle loci.  Returns the two possible
// y diagonals (apexes on the same side, apexes on opposite sides), sorted.
inline std::pair<double, double> planar_y(double a, double b, double c,
                                          double d, double x) {
    double tB = (a * a + x * x - b * b) / (2.0 * x);
    double hB = std::sqrt(std::max(0.0, a * a - tB * tB));
    double tD = (d * d + x * x - c * c) / (2.0 * x);
    double hD = std::sqrt(std::max(0.0, d * d - tD * tD));
    double y_same = std::hypot(tB - tD, hB - hD);
    double y_opp = std::hypot(tB - tD, hB + hD);
    if (y_same > y_opp) std::swap(y_same, y_opp);
    return {y_same, y_opp};
}

// Largest y over the non-planar fold family at fixed x, found by maximizing
// the Cayley-Menger volume with a golden-section search over y.
inline double max_volume_y(double a, double b, double c, double d, double x) {
    auto [ylo, yhi] = planar_y(a, b, c, d, x);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = ylo, hi = yhi;
    double m1 = hi - gr * (hi - lo);
    double m2 = lo + gr * (hi - lo);
    auto vol2 = [&](double y) { return cm_det_quad(a, b, c, d, x, y); };
    double f1 = vol2(m1), f2 = vol2(m2);
    for (int i = 0; i < 200 && hi - lo > 1e-13 * (1.0 + hi); ++i) {
        if (f1 < f2) {
            lo = m1; m1 = m2; f1 = f2;
            m2 = lo + gr * (hi - lo); f2 = vol2(m2);
        } else {
            hi = m2; m2 = m1; f2 = f1;
            m1 = hi - gr * (hi - lo); f1 = vol2(m1);
        }
    }
    return 0.5 * (lo + hi);
}

// Extreme input angle by bisection on bare triangle feasibility of the
// coupler/output dyad.  `want_hi` = true finds the upper end of the feasible
// arc starting from a feasible angle; false finds the lower end.
inline double bisect_theta_limit(double ground, double input, double coupler,
                                 double output, double feasible_at,
                                 double infeasible_at) {
    auto feasible = [&](double th) {
        double f = std::sqrt(ground * ground + input * input -
                             2.0 * ground * input * std::cos(th));
        return f >= std::fabs(coupler - output) && f <= coupler + output;
    };
    double good = feasible_at, bad = infeasible_at;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (good + bad);
        (feasible(mid) ? good : bad) = mid;
    }
    return good;
}

// Fixed-seed generator of valid quadrilateral side sets with a healthy
// polygon margin (longest side comfortably below the sum of the others).
class QuadSampler {
  public:
    explicit QuadSampler(std::uint64_t seed) : rng_(seed), dist_(0.5, 2.0) {}

    std::array<double, 4> next() {
        for (;;) {
            std::array<double, 4> q = {dist_(rng_), dist_(rng_), dist_(rng_),
                                       dist_(rng_)};
            double sum = q[0] + q[1] + q[2] + q[3];
            double mx = *std::max_element(q.begin(), q.end());
            if (sum - 2.0 * mx > 0.05 * sum) return q;
        }
    }

    double uniform01() { return uni_(rng_); }

  private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
    std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

}  // namespace oracle
