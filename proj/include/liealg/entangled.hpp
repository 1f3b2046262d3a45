#pragma once

#include <cstdint>
#include <vector>

#include "liealg/states.hpp"

namespace liealg {

// Two-particle pure state held as a coefficient matrix C[n1][n2] over
// basis1 x basis2, Frobenius-normalized.
class BipartiteState {
public:
    BipartiteState(IrrepLabel label1, IrrepLabel label2, Matrix coeffs, StateMeta meta = {});

    const IrrepLabel& label1() const { return label1_; }
    const IrrepLabel& label2() const { return label2_; }
    int dim1() const { return static_cast<int>(coeffs_.rows()); }
    int dim2() const { return static_cast<int>(coeffs_.cols()); }
    const Matrix& coeffs() const { return coeffs_; }
    const StateMeta& meta() const { return meta_; }

private:
    IrrepLabel label1_, label2_;
    Matrix coeffs_;
    StateMeta meta_;
};

// C[n1][n2] = a_{n1} b_{n2}; Schmidt rank 1.
BipartiteState product(const StateVector& a, const StateVector& b);

struct SuperpositionTerm {
    cxd weight;
    StateVector left;
    StateVector right;
};

// Normalized weighted sum of product states.  All terms must share both
// bases; full cancellation raises degenerate_superposition_error.
BipartiteState superpose(const std::vector<SuperpositionTerm>& terms);

cxd overlap(const BipartiteState& a, const BipartiteState& b);
double fidelity(const BipartiteState& a, const BipartiteState& b);
double max_coeff_distance(const BipartiteState& a, const BipartiteState& b);

// (1/sqrt2)(e^{-i pi/4} |j,-i gamma1>|j,-i gamma2> + e^{+i pi/4} |j,+i gamma1>|j,+i gamma2>)
BipartiteState entangled_su2_parity(double j, cxd gamma1, cxd gamma2);

// (1/sqrt2)(e^{+i pi/4} |k,-i eta1>|k,-i eta2> + e^{-i pi/4} |k,+i eta1>|k,+i eta2>)
// in the Perelomov / Barut-Girardello family.
BipartiteState entangled_perelomov(double k, cxd eta1, cxd eta2,
                                   double tail_tol = kDefaultTailTol);
BipartiteState entangled_barut_girardello(double k, cxd eta1, cxd eta2,
                                          double tail_tol = kDefaultTailTol);

// Renormalized (1/2)[(|e1>+|-e1>)(x)|e2> + (|e1>-|-e1>)(x)|-e2>] with
// binomial / negative binomial components; equals the cross-Kerr output at
// chi = pi applied to the corresponding product state.
BipartiteState entangled_binomial(int m_big, cxd eta1, cxd eta2);
BipartiteState entangled_negative_binomial(int m_big, cxd eta1, cxd eta2,
                                           double tail_tol = kDefaultTailTol);

enum class SqueezedSector { Vacuum, First };

// Parity superposition of two-mode squeezed components, embedded in the full
// Fock basis (even x even or odd x odd support).
BipartiteState entangled_squeezed(cxd eta1, cxd eta2, SqueezedSector sector,
                                  double tail_tol = kDefaultTailTol);

// N-qubit product-basis amplitude vector with party metadata; enough to
// carry the Fourier-transform state below.
struct NPartyState {
    int num_qubits = 0;
    Vector amplitudes; // dimension 2^num_qubits, index bits are the qubit values

    std::uint64_t dim() const { return static_cast<std::uint64_t>(amplitudes.size()); }
};

// Amplitudes q^{-1/2} exp(i 2 pi a c / q) on computational index c, q = 2^N.
NPartyState qft_state(std::uint64_t a, int num_qubits);

cxd overlap(const NPartyState& a, const NPartyState& b);

} // namespace liealg
