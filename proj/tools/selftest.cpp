#include "commands.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <vector>

#include "liealg/dynamics.hpp"
#include "liealg/measures.hpp"

namespace liealg::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const cxd kI{0.0, 1.0};

struct Suite {
    std::string name;
    int passed = 0;
    int failed = 0;

    void check(bool ok) { ok ? ++passed : ++failed; }
};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double relation_residual(const LadderOps& g, double sign) {
    return std::max({max_abs(commutator(g.plus, g.minus) - sign * 2.0 * g.z),
                     max_abs(commutator(g.z, g.plus) - g.plus),
                     max_abs(commutator(g.z, g.minus) + g.minus)});
}

void algebra_su2(Suite& s) {
    for (double j : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        const LadderOps g = su2_generators(j);
        s.check(relation_residual(g, 1.0) < 1e-13);
        s.check(relation_residual(dress_parity(g, parity_operator(g.dim())), 1.0) < 1e-13);
        s.check(relation_residual(
                    dress_phase(g, [](int n) { return 0.7 * n * n; }), 1.0) < 1e-13);
    }
}

void algebra_su11(Suite& s) {
    const int n_max = 60;
    for (double k : {0.25, 0.5, 0.75, 1.0, 2.0}) {
        const LadderOps g = su11_generators(k, n_max);
        const Matrix comm = commutator(g.plus, g.minus) + 2.0 * g.z;
        s.check(comm.topLeftCorner(n_max, n_max).cwiseAbs().maxCoeff() < 1e-11);
        const Matrix casimir = g.z * g.z - 0.5 * (g.plus * g.minus + g.minus * g.plus) -
                               k * (k - 1.0) * Matrix::Identity(n_max + 1, n_max + 1);
        s.check(casimir.topLeftCorner(n_max - 1, n_max - 1).cwiseAbs().maxCoeff() < 1e-11);
    }
}

void matexp_unitarity(Suite& s) {
    std::mt19937 gen(7u);
    std::normal_distribution<double> nd;
    for (int dim : {3, 10, 24, 40, 64}) {
        Matrix h(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) h(r, c) = cxd{nd(gen), nd(gen)};
        h = (h + h.adjoint()).eval();
        const Matrix u = mat_exp(kI * h);
        s.check(max_abs(u.adjoint() * u - Matrix::Identity(dim, dim)) < 1e-12);
    }
}

void parity_state_oracles(Suite& s) {
    for (double j : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        for (cxd gamma : {cxd{0.3, 0.0}, cxd{0.6, 0.6}}) {
            LadderOps g = dress_parity(su2_generators(j), parity_operator(su2_generators(j).dim()));
            const double theta = 2.0 * std::atan(std::abs(gamma));
            const double phi = std::arg(gamma);
            const Matrix a = -(theta / 2.0) *
                             (g.plus * std::exp(-kI * phi) - g.minus * std::exp(kI * phi));
            Vector top = Vector::Zero(g.dim());
            top(g.dim() - 1) = 1.0;
            const Vector viaexp = mat_exp(a) * top;
            s.check((su2_parity_coherent(j, gamma).amplitudes() - viaexp)
                        .cwiseAbs()
                        .maxCoeff() < 1e-10);
        }
    }
    const int n_max = 80;
    for (double k : {0.25, 0.5, 1.0}) {
        const cxd eta{0.4, 0.1};
        LadderOps g = dress_parity(su11_generators(k, n_max), parity_operator(n_max + 1));
        const cxd xi = std::atanh(std::abs(eta)) * eta / std::abs(eta);
        const Matrix a = xi * g.plus - std::conj(xi) * g.minus;
        Vector ground = Vector::Zero(n_max + 1);
        ground(0) = 1.0;
        const Vector viaexp = mat_exp(a) * ground;
        s.check((embedded(perelomov_parity(k, eta, 1e-13), n_max + 1).amplitudes() - viaexp)
                    .cwiseAbs()
                    .maxCoeff() < 1e-10);
    }
}

void bg_eigenrelation(Suite& s) {
    for (double k : {0.5, 1.0}) {
        for (double eta : {1.0, 3.0}) {
            const StateVector b = barut_girardello(k, eta, 1e-12);
            const LadderOps g = su11_generators(k, b.dim() - 1);
            s.check((g.minus * b.amplitudes() - eta * b.amplitudes()).norm() < 1e-10);
        }
    }
}

void nonlinear_reductions(Suite& s) {
    const PhaseFn linear_pi = [](int n) { return kPi * n; };
    for (double j : {0.5, 1.5, 2.5}) {
        s.check((nonlinear_su2(j, 0.7, linear_pi).amplitudes() -
                 su2_parity_coherent(j, 0.7).amplitudes())
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
    }
    for (double k : {0.25, 0.5, 1.0}) {
        s.check((nonlinear_perelomov(k, 0.5, linear_pi).amplitudes() -
                 perelomov_parity(k, 0.5).amplitudes())
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
        s.check((nonlinear_bg(k, 1.0, linear_pi).amplitudes() -
                 bg_parity(k, 1.0).amplitudes())
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
    }
}

void generation_identities(Suite& s) {
    double dev = 0.0;
    generate_entangled_su2(1.0, 0.5, 0.5, 0.8, &dev);
    s.check(dev < 1e-10);
    generate_entangled_su11(0.5, 0.4, 0.4, 0.8, Su11Family::Perelomov, 1e-12, &dev);
    s.check(dev < 1e-9);
    generate_entangled_su11(0.5, 1.0, 1.0, 0.8, Su11Family::BarutGirardello, 1e-13, &dev);
    s.check(dev < 1e-9);
    generate_cat_su2(0.5, 0.6, 0.6, 1.0, &dev);
    s.check(dev < 1e-10);
    generate_cat_su11(0.5, 0.5, 0.5, 1.0, Su11Family::Perelomov, 1e-12, &dev);
    s.check(dev < 1e-9);

    const BipartiteState binom_in =
        product(binomial_state(4, 0.4), binomial_state(4, 0.4));
    s.check(max_coeff_distance(kerr_cross(binom_in, kPi), entangled_binomial(4, 0.4, 0.4)) <
            1e-10);
    const BipartiteState nb_in = product(negative_binomial_state(3, 0.4),
                                         negative_binomial_state(3, 0.4));
    s.check(max_coeff_distance(kerr_cross(nb_in, kPi),
                               entangled_negative_binomial(3, 0.4, 0.4)) < 1e-10);
}

void measure_oracles(Suite& s) {
    for (double j : {0.5, 1.0}) {
        for (double g = 0.25; g <= 2.0; g += 0.25) {
            const BipartiteState psi = entangled_su2_parity(j, g, g);
            s.check(std::abs(bell_expectation(psi) - bell_closed_su2(j, g)) < 1e-10);
        }
    }
    for (double e = 0.15; e <= 0.9; e += 0.15) {
        const BipartiteState psi = entangled_perelomov(0.5, e, e);
        s.check(std::abs(bell_expectation(psi) - bell_closed_su11(0.5, e)) < 1e-10);
    }
}

void qft_orthonormality(Suite& s) {
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            const cxd ov = overlap(qft_state(a, 3), qft_state(b, 3));
            s.check(std::abs(ov - (a == b ? cxd{1.0, 0.0} : cxd{0.0, 0.0})) < 1e-13);
        }
    }
}

void contraction(Suite& s) {
    const StateVector target = ho_coherent(1.0);
    const int m_big = 10000;
    const double eta = 1.0 / std::sqrt(static_cast<double>(m_big));
    const StateVector b = binomial_state(m_big, eta);
    const StateVector nb = negative_binomial_state(m_big, eta);
    const int dim = std::max({b.dim(), nb.dim(), target.dim()});
    s.check(fidelity(embedded(b, dim), embedded(target, dim)) >= 1.0 - 1e-3);
    s.check(fidelity(embedded(nb, dim), embedded(target, dim)) >= 1.0 - 1e-3);
}

} // namespace

int run_selftest() {
    std::vector<std::pair<std::string, std::function<void(Suite&)>>> suites{
        {"algebra-su2", algebra_su2},
        {"algebra-su11", algebra_su11},
        {"matexp-unitarity", matexp_unitarity},
        {"parity-state-oracles", parity_state_oracles},
        {"bg-eigenrelation", bg_eigenrelation},
        {"nonlinear-reductions", nonlinear_reductions},
        {"generation-identities", generation_identities},
        {"measure-oracles", measure_oracles},
        {"qft-orthonormality", qft_orthonormality},
        {"contraction", contraction},
    };

    int total_passed = 0;
    int total_failed = 0;
    for (auto& [name, fn] : suites) {
        Suite s{name};
        try {
            fn(s);
        } catch (const std::exception& e) {
            ++s.failed;
            std::cout << name << ": exception: " << e.what() << "\n";
        }
        std::cout << name << ": " << s.passed << " passed, " << s.failed << " failed\n";
        total_passed += s.passed;
        total_failed += s.failed;
    }
    std::cout << "selftest: " << total_passed << " passed, " << total_failed << " failed\n";
    return total_failed == 0 ? kExitOk : kExitGate;
}

} // namespace liealg::cli
