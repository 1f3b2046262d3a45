#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "liealg/entangled.hpp"
#include "liealg/states.hpp"

namespace test_helpers {

using liealg::cxd;
using liealg::Matrix;
using liealg::Vector;

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Vector& a, const Vector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double state_distance(const liealg::StateVector& a, const liealg::StateVector& b) {
    return max_abs_diff(a.amplitudes(), b.amplitudes());
}

// Distance after removing an overall phase (aligned on the overlap).
inline double state_distance_up_to_phase(const liealg::StateVector& a,
                                         const liealg::StateVector& b) {
    cxd ov = liealg::overlap(a, b);
    const cxd phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cxd{1.0, 0.0};
    return max_abs_diff(a.amplitudes() * phase, b.amplitudes());
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

// Flattened two-particle vector back into a coefficient matrix,
// index v(n1 * d2 + n2) -> C(n1, n2).
inline Matrix unflatten(const Vector& v, int d1, int d2) {
    Matrix c(d1, d2);
    for (int n1 = 0; n1 < d1; ++n1) {
        for (int n2 = 0; n2 < d2; ++n2) {
            c(n1, n2) = v(n1 * d2 + n2);
        }
    }
    return c;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

inline cxd random_on_disc(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(r, phi);
}

} // namespace test_helpers
