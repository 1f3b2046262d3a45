#include "liealg/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

constexpr double kPi = std::numbers::pi;
const cxd kI{0.0, 1.0};

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

template <typename EnergyFn>
StateVector evolve_diagonal(const StateVector& s, const EnergyFn& energy, double t) {
    Vector amps = s.amplitudes();
    for (int n = 0; n < s.dim(); ++n) {
        amps(n) *= std::exp(-kI * (energy(n) * t));
    }
    return StateVector(s.label(), std::move(amps), s.meta());
}

void gate_identity(double deviation, double tol, const char* what, double* deviation_out) {
    if (deviation_out != nullptr) {
        *deviation_out = deviation;
    }
    if (!(deviation <= tol)) {
        throw identity_error(std::string(what) + ": deviation " + std::to_string(deviation) +
                             " exceeds tolerance " + std::to_string(tol));
    }
}

} // namespace

StateVector evolve(const StateVector& s, const RotatorHamiltonian& h, double t) {
    if (!(s.label() == IrrepLabel::su2(h.j))) {
        throw std::invalid_argument("evolve: state basis does not match the rotator irrep");
    }
    return evolve_diagonal(s, [&](int m) { return h.energy(m); }, t);
}

StateVector evolve(const StateVector& s, const KerrHamiltonian& h, double t) {
    if (!(s.label() == IrrepLabel::su11(h.k))) {
        throw std::invalid_argument("evolve: state basis does not match the oscillator irrep");
    }
    return evolve_diagonal(s, [&](int n) { return h.energy(n); }, t);
}

BipartiteState evolve(const BipartiteState& s, const CrossNumberHamiltonian& h, double t) {
    Matrix coeffs = s.coeffs();
    for (int n1 = 0; n1 < s.dim1(); ++n1) {
        for (int n2 = 0; n2 < s.dim2(); ++n2) {
            coeffs(n1, n2) *= std::exp(-kI * (h.energy(n1, n2) * t));
        }
    }
    return BipartiteState(s.label1(), s.label2(), std::move(coeffs), s.meta());
}

BipartiteState kerr_cross(const BipartiteState& s, double chi) {
    if (s.label1().kind != BasisKind::Fock || s.label2().kind != BasisKind::Fock) {
        throw std::invalid_argument("kerr_cross: both bases must be Fock spaces");
    }
    return evolve(s, CrossNumberHamiltonian{0.0, 0.0, chi}, 1.0);
}

BipartiteState generate_entangled_su2(double j, cxd gamma1, cxd gamma2, double chi1,
                                      double* deviation_out) {
    if (!is_integer(j)) {
        throw std::invalid_argument(
            "generate_entangled_su2: the identity is only supported for integer j");
    }
    if (!(chi1 > 0.0)) {
        throw std::invalid_argument("generate_entangled_su2: chi1 must be positive");
    }
    const BipartiteState initial =
        product(su2_coherent(j, -kI * gamma1), su2_coherent(j, -kI * gamma2));
    const BipartiteState evolved =
        evolve(initial, CrossNumberHamiltonian{chi1, chi1, 2.0 * chi1}, kPi / (2.0 * chi1));
    const BipartiteState target = entangled_su2_parity(j, gamma1, gamma2);
    gate_identity(max_coeff_distance(evolved, target), 1e-10, "generate_entangled_su2",
                  deviation_out);
    return evolved;
}

BipartiteState generate_entangled_su11(double k, cxd eta1, cxd eta2, double lambda1,
                                       Su11Family family, double tail_tol,
                                       double* deviation_out) {
    if (!(lambda1 > 0.0)) {
        throw std::invalid_argument("generate_entangled_su11: lambda1 must be positive");
    }
    const bool perel = family == Su11Family::Perelomov;
    const BipartiteState target =
        perel ? entangled_perelomov(k, eta1, eta2, tail_tol)
              : entangled_barut_girardello(k, eta1, eta2, tail_tol);
    // Build the initial product on the same truncation as the target.
    auto make = [&](cxd e, int n_max) {
        return perel ? perelomov_fixed(k, e, n_max) : barut_girardello_fixed(k, e, n_max);
    };
    const BipartiteState initial = product(make(kI * eta1, target.dim1() - 1),
                                           make(kI * eta2, target.dim2() - 1));
    const BipartiteState evolved = evolve(
        initial, CrossNumberHamiltonian{lambda1, lambda1, 2.0 * lambda1}, kPi / (2.0 * lambda1));
    gate_identity(max_coeff_distance(evolved, target), 1e-9, "generate_entangled_su11",
                  deviation_out);
    return evolved;
}

namespace {

// (1/2)[(|p1> + s|-p1>)(x)|p2> + (s|p1> - |-p1>)(x)|-p2>], s = (-1)^{2j}
// for su(2) and s = 1 for su(1,1); assembled from single-particle states and
// renormalized.
template <typename MakeState>
BipartiteState two_branch_template(const MakeState& make, cxd p1, cxd p2, double sign) {
    const StateVector a_plus = make(p1);
    const StateVector a_minus = make(-p1);
    const StateVector b_plus = make(p2);
    const StateVector b_minus = make(-p2);
    std::vector<SuperpositionTerm> terms{{0.5, a_plus, b_plus},
                                         {0.5 * sign, a_minus, b_plus},
                                         {0.5 * sign, a_plus, b_minus},
                                         {-0.5, a_minus, b_minus}};
    return superpose(terms);
}

} // namespace

BipartiteState generate_cat_su2(double j, cxd gamma1, cxd gamma2, double chi3,
                                double* deviation_out) {
    if (!(chi3 > 0.0)) {
        throw std::invalid_argument("generate_cat_su2: chi3 must be positive");
    }
    const BipartiteState initial =
        product(su2_coherent(j, gamma1), su2_coherent(j, gamma2));
    const BipartiteState evolved =
        evolve(initial, CrossNumberHamiltonian{0.0, 0.0, chi3}, kPi / chi3);
    const int twoj = IrrepLabel::su2(j).su2_dim() - 1;
    const double sign = (twoj % 2 == 0) ? 1.0 : -1.0;
    const BipartiteState target =
        two_branch_template([&](cxd g) { return su2_coherent(j, g); }, gamma1, gamma2, sign);
    gate_identity(max_coeff_distance(evolved, target), 1e-10, "generate_cat_su2",
                  deviation_out);
    return evolved;
}

BipartiteState generate_cat_su11(double k, cxd eta1, cxd eta2, double lambda3,
                                 Su11Family family, double tail_tol, double* deviation_out) {
    if (!(lambda3 > 0.0)) {
        throw std::invalid_argument("generate_cat_su11: lambda3 must be positive");
    }
    const bool perel = family == Su11Family::Perelomov;
    const double big = std::max(std::abs(eta1), std::abs(eta2));
    const int n_max = big == 0.0 ? 0
                      : (perel ? perelomov(k, big, tail_tol).dim()
                               : barut_girardello(k, big, tail_tol).dim()) -
                            1;
    auto make = [&](cxd e) {
        return perel ? perelomov_fixed(k, e, n_max) : barut_girardello_fixed(k, e, n_max);
    };
    const BipartiteState initial = product(make(eta1), make(eta2));
    const BipartiteState evolved =
        evolve(initial, CrossNumberHamiltonian{0.0, 0.0, lambda3}, kPi / lambda3);
    const BipartiteState target = two_branch_template(make, eta1, eta2, 1.0);
    gate_identity(max_coeff_distance(evolved, target), 1e-9, "generate_cat_su11",
                  deviation_out);
    return evolved;
}

} // namespace liealg
