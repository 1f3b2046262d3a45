#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "liealg/errors.hpp"
#include "liealg/states.hpp"
#include "helpers.hpp"

using namespace liealg;
using test_helpers::state_distance;

namespace {

constexpr double kPi = std::numbers::pi;
const cxd I{0.0, 1.0};

// Operator-exponential route for the su(2) rotation, optionally dressed.
StateVector rotated_top_state(double j, cxd gamma, bool dressed) {
    LadderOps g = su2_generators(j);
    if (dressed) g = dress_parity(g, parity_operator(g.dim()));
    const double theta = 2.0 * std::atan(std::abs(gamma));
    const double phi = std::arg(gamma);
    const Matrix a =
        -(theta / 2.0) * (g.plus * std::exp(-I * phi) - g.minus * std::exp(I * phi));
    Vector top = Vector::Zero(g.dim());
    top(g.dim() - 1) = 1.0;
    return StateVector(IrrepLabel::su2(j), mat_exp(a) * top);
}

// Operator-exponential route for the su(1,1) displacement on a truncated
// basis, optionally dressed.
StateVector displaced_ground_state(double k, cxd eta, int n_max, bool dressed) {
    LadderOps g = su11_generators(k, n_max);
    if (dressed) g = dress_parity(g, parity_operator(g.dim()));
    const cxd xi = std::abs(eta) == 0.0 ? cxd{0.0, 0.0}
                                        : std::atanh(std::abs(eta)) * eta / std::abs(eta);
    const Matrix a = xi * g.plus - std::conj(xi) * g.minus;
    Vector ground = Vector::Zero(g.dim());
    ground(0) = 1.0;
    return StateVector(IrrepLabel::su11(k), mat_exp(a) * ground);
}

double eigen_residual(const StateVector& s, const Matrix& op, cxd eigenvalue) {
    return (op * s.amplitudes() - eigenvalue * s.amplitudes()).norm();
}

} // namespace

TEST_CASE("parameter maps from angles") {
    CHECK(std::abs(su2_param(0.0, 1.3)) == 0.0);
    CHECK(su2_param(kPi / 2.0, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(su2_param(kPi / 2.0, 0.0).imag()) < 1e-16);

    const cxd eta = su11_param(0.5, 0.2);
    CHECK(std::abs(eta) == doctest::Approx(std::tanh(0.5)).epsilon(1e-14));
    CHECK(std::arg(eta) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::abs(eta - std::polar(std::tanh(0.5), 0.2)) < 1e-15);

    CHECK_THROWS_AS(su2_param(kPi, 0.0), std::domain_error);
    CHECK_THROWS_AS(su2_param(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("su2 coherent state: basis limit, balanced case, rotation oracle") {
    const StateVector ground = su2_coherent(1.5, 0.0);
    CHECK(ground.dim() == 4);
    CHECK(std::abs(ground.amplitude(3) - cxd{1.0, 0.0}) == 0.0);
    CHECK(std::abs(ground.amplitude(0)) == 0.0);

    const StateVector balanced = su2_coherent(0.5, 1.0);
    CHECK(std::abs(balanced.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(balanced.amplitude(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

    for (cxd gamma : {cxd{0.5, 0.0}, cxd{0.2, -0.6}, cxd{-1.4, 0.3}}) {
        for (double j : {0.5, 1.0, 2.5}) {
            const StateVector closed = su2_coherent(j, gamma);
            const StateVector viaexp = rotated_top_state(j, gamma, false);
            CHECK(std::abs(overlap(closed, viaexp) - 1.0) < 1e-12);
            CHECK(state_distance(closed, viaexp) < 1e-12);
        }
    }
}

TEST_CASE("su2 parity coherent state equals the dressed-rotation pipeline") {
    const StateVector at_zero = su2_parity_coherent(1.0, 0.0);
    CHECK(std::abs(at_zero.amplitude(2) - cxd{1.0, 0.0}) < 1e-15);

    CHECK(state_distance(su2_parity_coherent(1.0, 0.7), rotated_top_state(1.0, 0.7, true)) <
          1e-12);

    const StateVector half = su2_parity_coherent(0.5, 1.0);
    CHECK(std::abs(half.amplitude(0)) ==
          doctest::Approx(std::abs(half.amplitude(1))).epsilon(1e-13));

    for (double j : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        for (cxd gamma : {cxd{0.3, 0.0}, cxd{0.0, 0.9}, cxd{-0.5, 0.5}, cxd{1.0, 0.0}}) {
            CAPTURE(j);
            CAPTURE(gamma.real());
            CAPTURE(gamma.imag());
            CHECK(state_distance(su2_parity_coherent(j, gamma),
                                 rotated_top_state(j, gamma, true)) < 1e-10);
        }
    }
}

TEST_CASE("nonlinear su2 state: trivial phase, parity reduction, magnitudes") {
    const PhaseFn zero = [](int) { return 0.0; };
    CHECK(state_distance(nonlinear_su2(1.5, 0.4, zero), su2_coherent(1.5, 0.4)) == 0.0);

    const PhaseFn linear_pi = [](int n) { return kPi * n; };
    for (double j : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        for (cxd gamma : {cxd{0.6, 0.0}, cxd{0.2, 0.7}}) {
            CAPTURE(j);
            CHECK(state_distance(nonlinear_su2(j, gamma, linear_pi),
                                 su2_parity_coherent(j, gamma)) < 1e-12);
        }
    }

    const PhaseFn quad = [](int n) { return double(n) * n; };
    const StateVector nl = nonlinear_su2(1.5, 0.4, quad);
    const StateVector base = su2_coherent(1.5, 0.4);
    CHECK(nl.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 0; n < nl.dim(); ++n) {
        CHECK(std::abs(nl.amplitude(n)) ==
              doctest::Approx(std::abs(base.amplitude(n))).epsilon(1e-13));
    }
}

TEST_CASE("perelomov state: geometric distribution, truncation depth, domain") {
    const StateVector at_zero = perelomov(0.5, 0.0);
    CHECK(at_zero.dim() == 1);
    CHECK(std::abs(at_zero.amplitude(0) - cxd{1.0, 0.0}) == 0.0);

    const StateVector geom = perelomov(0.5, 0.5);
    for (int n = 0; n < 10; ++n) {
        CHECK(geom.probability(n) ==
              doctest::Approx(0.75 * std::pow(0.25, n)).epsilon(1e-12));
    }

    const StateVector deep = perelomov(1.0, 0.9, 1e-12);
    CHECK(deep.dim() >= 251); // n_max >= 250
    CHECK(deep.meta().tail_mass < 1e-12);
    CHECK(deep.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_WITH_AS(perelomov(0.5, 1.2), doctest::Contains("unit disc"),
                         std::domain_error);
    CHECK_THROWS_AS(perelomov(0.5, cxd{0.8, 0.8}), std::domain_error);
}

TEST_CASE("perelomov parity state: magnitudes, construction identity, eigenrelation") {
    CHECK(perelomov_parity(0.5, 0.0).dim() == 1);

    const StateVector parity = perelomov_parity(0.5, 0.6);
    const StateVector base = perelomov_fixed(0.5, 0.6, parity.dim() - 1);
    for (int n = 0; n < parity.dim(); ++n) {
        CHECK(std::abs(parity.amplitude(n)) ==
              doctest::Approx(std::abs(base.amplitude(n))).epsilon(1e-12));
    }

    // definition: balanced combination of the -+i eta branches
    const StateVector p14 = perelomov_parity(0.25, 0.5);
    const int n_max = p14.dim() - 1;
    const Vector manual = std::exp(I * kPi / 4.0) / std::sqrt(2.0) *
                              perelomov_fixed(0.25, -I * 0.5, n_max).amplitudes() +
                          std::exp(-I * kPi / 4.0) / std::sqrt(2.0) *
                              perelomov_fixed(0.25, I * 0.5, n_max).amplitudes();
    CHECK(test_helpers::max_abs_diff(p14.amplitudes(), manual) < 1e-14);
    CHECK(p14.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));

    // nonlinear characterization: eigenstate of (-1)^N K- / (N + 2k)
    const double k = 0.5;
    const StateVector s = perelomov_parity(k, 0.5);
    const LadderOps g = su11_generators(k, s.dim() - 1);
    Matrix f = Matrix::Zero(s.dim(), s.dim());
    for (int n = 0; n < s.dim(); ++n) {
        f(n, n) = (n % 2 == 0 ? 1.0 : -1.0) / (n + 2.0 * k);
    }
    CHECK(eigen_residual(s, f * g.minus, 0.5) < 1e-10);
}

TEST_CASE("su11 parity states match the dressed-displacement exponential") {
    const int n_max = 80;
    for (double k : {0.25, 0.5, 1.0}) {
        for (cxd eta : {cxd{0.3, 0.0}, cxd{0.0, 0.5}, cxd{-0.35, 0.2}}) {
            CAPTURE(k);
            CAPTURE(eta.real());
            const StateVector closed = embedded(perelomov_parity(k, eta, 1e-13), n_max + 1);
            const StateVector viaexp = displaced_ground_state(k, eta, n_max, true);
            CHECK(state_distance(closed, viaexp) < 1e-10);
        }
    }
    // undressed sanity: perelomov itself comes out of the plain displacement
    const StateVector closed = embedded(perelomov(0.5, 0.4, 1e-13), n_max + 1);
    CHECK(state_distance(closed, displaced_ground_state(0.5, 0.4, n_max, false)) < 1e-10);
}

TEST_CASE("barut-girardello state is an eigenstate of the lowering operator") {
    const StateVector at_zero = barut_girardello(1.0, 0.0);
    CHECK(at_zero.dim() == 1);

    for (double k : {0.5, 1.0}) {
        for (double eta : {0.5, 1.5, 3.0}) {
            CAPTURE(k);
            CAPTURE(eta);
            const StateVector s = barut_girardello(k, eta, 1e-12);
            const LadderOps g = su11_generators(k, s.dim() - 1);
            CHECK(eigen_residual(s, g.minus, eta) < 1e-10);
        }
    }
}

TEST_CASE("bg parity state: dressed eigenrelation and exponential oracle") {
    const double k = 0.5;
    const cxd eta{1.5, 0.0};
    const StateVector s = bg_parity(k, eta);
    const LadderOps g = su11_generators(k, s.dim() - 1);
    const Matrix dressed_minus = parity_operator(s.dim()) * g.minus;
    CHECK(eigen_residual(s, dressed_minus, eta) < 1e-10);

    // unnormalized exponential form exp(eta (N+2k-1)^{-1} K+ Pi)|k 0>
    const int n_max = 60;
    for (double kk : {0.5, 0.75, 1.0}) {
        const LadderOps gg = su11_generators(kk, n_max);
        Matrix f = Matrix::Zero(n_max + 1, n_max + 1);
        // f multiplies after raising, so only n >= 1 entries ever matter
        for (int n = 1; n <= n_max; ++n) f(n, n) = 1.0 / (n + 2.0 * kk - 1.0);
        const Matrix a = cxd{1.2, 0.4} * f * gg.plus * parity_operator(n_max + 1);
        Vector ground = Vector::Zero(n_max + 1);
        ground(0) = 1.0;
        const StateVector viaexp(IrrepLabel::su11(kk), mat_exp(a) * ground);
        const StateVector closed = embedded(bg_parity(kk, cxd{1.2, 0.4}, 1e-14), n_max + 1);
        CHECK(state_distance(closed, viaexp) < 1e-10);
    }
}

TEST_CASE("nonlinear su11 states reduce correctly") {
    const PhaseFn zero = [](int) { return 0.0; };
    const PhaseFn linear_pi = [](int n) { return kPi * n; };
    const PhaseFn gentle = [](int n) { return 0.1 * n; };

    CHECK(state_distance(nonlinear_perelomov(0.5, 0.5, zero), perelomov(0.5, 0.5)) == 0.0);
    CHECK(state_distance(nonlinear_bg(0.75, 1.0, zero), barut_girardello(0.75, 1.0)) == 0.0);

    for (double k : {0.25, 0.5, 1.0}) {
        CAPTURE(k);
        CHECK(state_distance(nonlinear_perelomov(k, 0.5, linear_pi),
                             perelomov_parity(k, 0.5)) < 1e-12);
        CHECK(state_distance(nonlinear_bg(k, 1.0, linear_pi), bg_parity(k, 1.0)) < 1e-12);
    }
    CHECK(state_distance(nonlinear_bg(0.75, 1.0, linear_pi), bg_parity(0.75, 1.0)) < 1e-12);

    const StateVector dressed = nonlinear_perelomov(0.5, 0.5, gentle);
    const StateVector plain = perelomov(0.5, 0.5);
    REQUIRE(dressed.dim() == plain.dim());
    for (int n = 0; n < dressed.dim(); ++n) {
        CHECK(std::abs(dressed.amplitude(n)) ==
              doctest::Approx(std::abs(plain.amplitude(n))).epsilon(1e-13));
    }
}

TEST_CASE("binomial state probabilities") {
    const StateVector vac = binomial_state(5, 0.0);
    CHECK(vac.dim() == 6);
    CHECK(std::abs(vac.amplitude(0) - cxd{1.0, 0.0}) == 0.0);

    const StateVector two = binomial_state(1, 0.6);
    CHECK(two.probability(0) == doctest::Approx(1.0 - 0.36).epsilon(1e-14));
    CHECK(two.probability(1) == doctest::Approx(0.36).epsilon(1e-14));

    // exact Pascal-triangle oracle for the binomial mass function
    const int m_big = 20;
    const double p = 0.09;
    long long pascal[21][21] = {};
    for (int n = 0; n <= 20; ++n) {
        pascal[n][0] = 1;
        for (int m = 1; m <= n; ++m) {
            pascal[n][m] = pascal[n - 1][m - 1] + (m <= n - 1 ? pascal[n - 1][m] : 0);
        }
    }
    const StateVector s = binomial_state(m_big, 0.3);
    for (int n = 0; n <= m_big; ++n) {
        const double expect = static_cast<double>(pascal[m_big][n]) * std::pow(p, n) *
                              std::pow(1.0 - p, m_big - n);
        CHECK(s.probability(n) == doctest::Approx(expect).epsilon(1e-12));
    }

    CHECK_THROWS_WITH_AS(binomial_state(4, 1.0), doctest::Contains("unit disc"),
                         std::domain_error);
    CHECK_THROWS_AS(binomial_state(0, 0.3), std::invalid_argument);
}

TEST_CASE("negative binomial state: geometric case and perelomov equivalence") {
    const StateVector geo = negative_binomial_state(1, 0.7);
    for (int n = 0; n < 8; ++n) {
        CHECK(geo.probability(n) ==
              doctest::Approx((1.0 - 0.49) * std::pow(0.49, n)).epsilon(1e-12));
    }

    const StateVector nb = negative_binomial_state(3, 0.4);
    const StateVector pe = perelomov(1.5, 0.4);
    REQUIRE(nb.dim() == pe.dim());
    CHECK(std::abs(overlap(nb, pe) - 1.0) < 1e-12);

    CHECK_THROWS_AS(negative_binomial_state(2, 1.1), std::domain_error);
}

TEST_CASE("squeezed states occupy a single parity sector") {
    CHECK(squeezed_vacuum(0.0).dim() == 1);
    const StateVector first0 = squeezed_first(0.0);
    CHECK(first0.dim() == 2);
    CHECK(std::abs(first0.amplitude(1) - cxd{1.0, 0.0}) == 0.0);

    const StateVector sv = squeezed_vacuum(0.5);
    const StateVector base = perelomov(0.25, 0.5);
    for (int n = 0; n < sv.dim(); ++n) {
        if (n % 2 == 1) {
            CHECK(std::abs(sv.amplitude(n)) == 0.0);
        } else {
            CHECK(sv.probability(n) ==
                  doctest::Approx(base.probability(n / 2)).epsilon(1e-12));
        }
    }

    const StateVector sf = squeezed_first(0.4);
    for (int n = 0; n < sf.dim(); ++n) {
        if (n % 2 == 0) CHECK(std::abs(sf.amplitude(n)) == 0.0);
    }

    CHECK_THROWS_AS(squeezed_vacuum(1.3), std::domain_error);
}

TEST_CASE("harmonic oscillator coherent state and the contraction limit") {
    CHECK(ho_coherent(0.0).dim() == 1);

    const StateVector s = ho_coherent(1.0);
    for (int n = 0; n < 10; ++n) {
        CHECK(s.probability(n) ==
              doctest::Approx(std::exp(-1.0) / std::tgamma(n + 1.0)).epsilon(1e-12));
    }

    // binomial and negative binomial states approach the coherent state as
    // M grows with |eta|^2 M = 1 fixed
    double prev_b = 0.0, prev_nb = 0.0;
    for (int m_big : {10, 100, 1000, 10000}) {
        const double eta = 1.0 / std::sqrt(static_cast<double>(m_big));
        const StateVector b = binomial_state(m_big, eta);
        const StateVector nb = negative_binomial_state(m_big, eta);
        const int dim = std::max({b.dim(), nb.dim(), s.dim()});
        const double fb = fidelity(embedded(b, dim), embedded(s, dim));
        const double fnb = fidelity(embedded(nb, dim), embedded(s, dim));
        CHECK(fb > prev_b);
        CHECK(fnb > prev_nb);
        prev_b = fb;
        prev_nb = fnb;
    }
    CHECK(prev_b >= 1.0 - 1e-3);
    CHECK(prev_nb >= 1.0 - 1e-3);
}

TEST_CASE("overlap: self, antipodal equator points, closed form") {
    const StateVector s = perelomov(0.5, 0.3);
    CHECK(std::abs(overlap(s, s) - 1.0) < 1e-14);

    CHECK(std::abs(overlap(su2_coherent(0.5, 1.0), su2_coherent(0.5, -1.0))) < 1e-15);

    const cxd ov = overlap(su2_coherent(1.0, 0.5), su2_coherent(1.0, -0.5));
    CHECK(ov.real() == doctest::Approx(0.36).epsilon(1e-13));
    CHECK(std::abs(ov.imag()) < 1e-15);

    CHECK_THROWS_AS(overlap(perelomov(0.5, 0.3), perelomov(0.5, 0.9)),
                    std::invalid_argument);
}

TEST_CASE("embedded and truncated states") {
    const StateVector s = perelomov(0.5, 0.5);
    const StateVector wide = embedded(s, s.dim() + 10);
    CHECK(wide.dim() == s.dim() + 10);
    CHECK(std::abs(overlap(wide, embedded(s, wide.dim())) - 1.0) < 1e-14);
    CHECK_THROWS_AS(embedded(s, s.dim() - 1), std::invalid_argument);

    const StateVector cut = truncated(s, 3);
    CHECK(cut.dim() == 3);
    CHECK(cut.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(truncated(s, 0), std::invalid_argument);
}

TEST_CASE("every constructor yields a unit-norm state with a small tail") {
    std::vector<StateVector> states;
    for (int i = 0; i < 5; ++i) {
        const cxd g = test_helpers::random_on_disc(1.5);
        const cxd e = test_helpers::random_on_disc(0.9);
        states.push_back(su2_coherent(1.5, g));
        states.push_back(su2_parity_coherent(2.0, g));
        states.push_back(perelomov(0.75, e));
        states.push_back(perelomov_parity(1.0, e));
        states.push_back(barut_girardello(0.5, 2.0 * g));
        states.push_back(bg_parity(1.0, e * 3.0));
        states.push_back(binomial_state(12, e));
        states.push_back(negative_binomial_state(4, e));
        states.push_back(squeezed_vacuum(e));
        states.push_back(squeezed_first(e));
        states.push_back(ho_coherent(2.0 * g));
    }
    for (const auto& s : states) {
        CHECK(s.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.meta().tail_mass < 1e-11);
    }
}
