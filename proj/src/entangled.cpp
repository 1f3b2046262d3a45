#include "liealg/entangled.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

constexpr double kPi = std::numbers::pi;
const cxd kI{0.0, 1.0};

Matrix outer(const StateVector& a, const StateVector& b) {
    return a.amplitudes() * b.amplitudes().transpose();
}

// Parity superposition of two product branches built by `make` at dressed
// arguments; w_minus weights the (-i p1, -i p2) branch.
template <typename MakeState>
BipartiteState parity_pair(IrrepLabel label, cxd w_minus, cxd w_plus, cxd p1, cxd p2,
                           const MakeState& make, StateMeta meta) {
    const StateVector a_minus = make(-kI * p1);
    const StateVector a_plus = make(kI * p1);
    const StateVector b_minus = make(-kI * p2);
    const StateVector b_plus = make(kI * p2);
    Matrix coeffs = w_minus * (a_minus.amplitudes() * b_minus.amplitudes().transpose()) +
                    w_plus * (a_plus.amplitudes() * b_plus.amplitudes().transpose());
    return BipartiteState(label, label, std::move(coeffs), std::move(meta));
}

} // namespace

BipartiteState::BipartiteState(IrrepLabel label1, IrrepLabel label2, Matrix coeffs,
                               StateMeta meta)
    : label1_(label1), label2_(label2), coeffs_(std::move(coeffs)), meta_(std::move(meta)) {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1) {
        throw std::invalid_argument("BipartiteState: empty coefficient matrix");
    }
    if (!coeffs_.allFinite()) {
        throw std::invalid_argument("BipartiteState: non-finite coefficient");
    }
    const double n = coeffs_.norm();
    if (n < 1e-12) {
        throw degenerate_superposition_error(
            "BipartiteState: superposition terms cancel to zero norm");
    }
    coeffs_ /= n;
}

BipartiteState product(const StateVector& a, const StateVector& b) {
    return BipartiteState(a.label(), b.label(), outer(a, b), {"product", 0.0});
}

BipartiteState superpose(const std::vector<SuperpositionTerm>& terms) {
    if (terms.empty()) {
        throw std::invalid_argument("superpose: term list is empty");
    }
    const auto& first = terms.front();
    Matrix coeffs = Matrix::Zero(first.left.dim(), first.right.dim());
    for (const auto& t : terms) {
        if (!(t.left.label() == first.left.label()) || t.left.dim() != first.left.dim() ||
            !(t.right.label() == first.right.label()) || t.right.dim() != first.right.dim()) {
            throw std::invalid_argument("superpose: terms must share both bases");
        }
        if (!std::isfinite(t.weight.real()) || !std::isfinite(t.weight.imag())) {
            throw std::invalid_argument("superpose: weight must be finite");
        }
        coeffs += t.weight * outer(t.left, t.right);
    }
    return BipartiteState(first.left.label(), first.right.label(), std::move(coeffs),
                          {"superposition", 0.0});
}

cxd overlap(const BipartiteState& a, const BipartiteState& b) {
    if (a.dim1() != b.dim1() || a.dim2() != b.dim2()) {
        throw std::invalid_argument("overlap: dimension mismatch");
    }
    return (a.coeffs().conjugate().cwiseProduct(b.coeffs())).sum();
}

double fidelity(const BipartiteState& a, const BipartiteState& b) {
    return std::norm(overlap(a, b));
}

double max_coeff_distance(const BipartiteState& a, const BipartiteState& b) {
    if (a.dim1() != b.dim1() || a.dim2() != b.dim2()) {
        throw std::invalid_argument("max_coeff_distance: dimension mismatch");
    }
    return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

BipartiteState entangled_su2_parity(double j, cxd gamma1, cxd gamma2) {
    const IrrepLabel label = IrrepLabel::su2(j);
    const cxd w = 1.0 / std::sqrt(2.0);
    return parity_pair(
        label, w * std::exp(-kI * (kPi / 4.0)), w * std::exp(kI * (kPi / 4.0)), gamma1, gamma2,
        [&](cxd g) { return su2_coherent(j, g); }, {"entangled-su2-parity", 0.0});
}

BipartiteState entangled_perelomov(double k, cxd eta1, cxd eta2, double tail_tol) {
    const IrrepLabel label = IrrepLabel::su11(k);
    // Both branches share one truncation so the coefficient matrix is square
    // over a common basis; sized by the larger parameter.
    const double big = std::max(std::abs(eta1), std::abs(eta2));
    const int n_max = big == 0.0 ? 0 : perelomov(k, big, tail_tol).dim() - 1;
    const cxd w = 1.0 / std::sqrt(2.0);
    return parity_pair(
        label, w * std::exp(kI * (kPi / 4.0)), w * std::exp(-kI * (kPi / 4.0)), eta1, eta2,
        [&](cxd e) { return perelomov_fixed(k, e, n_max); }, {"entangled-perelomov", 0.0});
}

BipartiteState entangled_barut_girardello(double k, cxd eta1, cxd eta2, double tail_tol) {
    const IrrepLabel label = IrrepLabel::su11(k);
    const double big = std::max(std::abs(eta1), std::abs(eta2));
    const int n_max = big == 0.0 ? 0 : barut_girardello(k, big, tail_tol).dim() - 1;
    const cxd w = 1.0 / std::sqrt(2.0);
    return parity_pair(
        label, w * std::exp(kI * (kPi / 4.0)), w * std::exp(-kI * (kPi / 4.0)), eta1, eta2,
        [&](cxd e) { return barut_girardello_fixed(k, e, n_max); },
        {"entangled-barut-girardello", 0.0});
}

namespace {

// (1/2)[(|a+> + |a->)(x)|b+> + (|a+> - |a->)(x)|b->]
BipartiteState even_odd_split(const StateVector& a_plus, const StateVector& a_minus,
                              const StateVector& b_plus, const StateVector& b_minus,
                              StateMeta meta) {
    std::vector<SuperpositionTerm> terms{{0.5, a_plus, b_plus},
                                         {0.5, a_minus, b_plus},
                                         {0.5, a_plus, b_minus},
                                         {-0.5, a_minus, b_minus}};
    BipartiteState s = superpose(terms);
    return BipartiteState(s.label1(), s.label2(), s.coeffs(), std::move(meta));
}

} // namespace

BipartiteState entangled_binomial(int m_big, cxd eta1, cxd eta2) {
    return even_odd_split(binomial_state(m_big, eta1), binomial_state(m_big, -eta1),
                          binomial_state(m_big, eta2), binomial_state(m_big, -eta2),
                          {"entangled-binomial", 0.0});
}

BipartiteState entangled_negative_binomial(int m_big, cxd eta1, cxd eta2, double tail_tol) {
    const double big = std::max(std::abs(eta1), std::abs(eta2));
    const int dim = big == 0.0 ? 1 : negative_binomial_state(m_big, big, tail_tol).dim();
    auto make = [&](cxd e) {
        return embedded(negative_binomial_state(m_big, e, tail_tol), dim);
    };
    return even_odd_split(make(eta1), make(-eta1), make(eta2), make(-eta2),
                          {"entangled-negative-binomial", 0.0});
}

BipartiteState entangled_squeezed(cxd eta1, cxd eta2, SqueezedSector sector, double tail_tol) {
    const double k = sector == SqueezedSector::Vacuum ? 0.25 : 0.75;
    const int offset = sector == SqueezedSector::Vacuum ? 0 : 1;
    const double big = std::max(std::abs(eta1), std::abs(eta2));
    const int n_max = big == 0.0 ? 0 : perelomov(k, big, tail_tol).dim() - 1;
    const int dim = 2 * n_max + 1 + offset;
    auto make = [&](cxd e) {
        const StateVector base = perelomov_fixed(k, e, n_max);
        Vector amps = Vector::Zero(dim);
        for (int n = 0; n <= n_max; ++n) {
            amps(2 * n + offset) = base.amplitude(n);
        }
        return StateVector(IrrepLabel::fock(), std::move(amps), base.meta());
    };
    const cxd w = 1.0 / std::sqrt(2.0);
    return parity_pair(
        IrrepLabel::fock(), w * std::exp(kI * (kPi / 4.0)), w * std::exp(-kI * (kPi / 4.0)),
        eta1, eta2, make,
        {sector == SqueezedSector::Vacuum ? "entangled-squeezed-vacuum"
                                          : "entangled-squeezed-first",
         0.0});
}

NPartyState qft_state(std::uint64_t a, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 12) {
        throw std::invalid_argument("qft_state: num_qubits must be in 1..12");
    }
    const std::uint64_t q = std::uint64_t{1} << num_qubits;
    if (a >= q) {
        throw std::invalid_argument("qft_state: a must satisfy 0 <= a < 2^num_qubits");
    }
    NPartyState s;
    s.num_qubits = num_qubits;
    s.amplitudes.resize(static_cast<Eigen::Index>(q));
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::uint64_t c = 0; c < q; ++c) {
        const double angle =
            2.0 * kPi * std::fmod(static_cast<double>(a) * static_cast<double>(c) /
                                      static_cast<double>(q),
                                  1.0);
        s.amplitudes(static_cast<Eigen::Index>(c)) = scale * std::exp(cxd(0.0, angle));
    }
    return s;
}

cxd overlap(const NPartyState& a, const NPartyState& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("overlap: qubit count mismatch");
    }
    return a.amplitudes.dot(b.amplitudes);
}

} // namespace liealg
