#pragma once

#include <string>

#include "liealg/algebra.hpp"

namespace liealg {

// Construction record carried by every state.
struct StateMeta {
    std::string family;
    double tail_mass = 0.0; // estimated probability neglected by truncation
};

// Normalized amplitude vector over a labelled basis.  Indexing follows the
// number-operator convention of algebra.hpp.
class StateVector {
public:
    StateVector(IrrepLabel label, Vector amplitudes, StateMeta meta = {});

    const IrrepLabel& label() const { return label_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    cxd amplitude(int n) const { return amps_(n); }
    double probability(int n) const { return std::norm(amps_(n)); }
    const StateMeta& meta() const { return meta_; }

private:
    IrrepLabel label_;
    Vector amps_;
    StateMeta meta_;
};

// Default truncation tolerance and the hard cap on the basis size.
inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr int kMaxBasisSize = 4096;

// gamma = exp(i phi) tan(theta/2).  theta = pi is singular; the antipodal
// state is the m = 2j basis state and must be built directly.
cxd su2_param(double theta, double phi);

// eta = exp(i theta) tanh(r)
cxd su11_param(double r, double theta);

// Basis state with a single unit amplitude.
StateVector basis_state(IrrepLabel label, int dim, int index);

// Zero-pad to a larger dimension of the same basis kind.
StateVector embedded(const StateVector& s, int dim);

// Drop amplitudes at index >= dim and renormalize.
StateVector truncated(const StateVector& s, int dim);

// <a|b>; requires equal dimensions.
cxd overlap(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

// --- su(2) family ---------------------------------------------------------

// |j gamma>: amplitude sqrt(C(2j,m)) gamma^m / (1+|gamma|^2)^j on the state
// with number index 2j - m.
StateVector su2_coherent(double j, cxd gamma);

// Balanced superposition of |j, -i(-1)^{2j} gamma> and |j, +i(-1)^{2j} gamma>
// with weights exp(-i pi/4)/sqrt2 and exp(+i pi/4)/sqrt2; equals the dressed
// rotation exp applied to |jj>.
StateVector su2_parity_coherent(double j, cxd gamma);

// Coherent amplitudes times exp[+i sum_{n=1}^{m} theta(2j-n)] at expansion
// index m.  theta(x) = pi x reproduces the parity state.
StateVector nonlinear_su2(double j, cxd gamma, const PhaseFn& theta);

// --- su(1,1) family --------------------------------------------------------

// Displacement-type state, amplitudes (1-|eta|^2)^k sqrt(G(2k+n)/(G(2k) n!))
// eta^n; requires |eta| < 1.  Truncation index chosen from an analytic tail
// bound, then renormalized.
StateVector perelomov(double k, cxd eta, double tail_tol = kDefaultTailTol);
StateVector perelomov_fixed(double k, cxd eta, int n_max);

StateVector perelomov_parity(double k, cxd eta, double tail_tol = kDefaultTailTol);

// Lowering-operator eigenstate, amplitudes ~ eta^n / sqrt(n! G(n+2k)),
// normalized through the modified Bessel function.  Any finite eta.
StateVector barut_girardello(double k, cxd eta, double tail_tol = kDefaultTailTol);
StateVector barut_girardello_fixed(double k, cxd eta, int n_max);

StateVector bg_parity(double k, cxd eta, double tail_tol = kDefaultTailTol);

// Base-state amplitudes times exp[-i sum_{m=0}^{n-1} phi(m)].
// phi(x) = pi x reproduces the corresponding parity state.
StateVector nonlinear_perelomov(double k, cxd eta, const PhaseFn& phi,
                                double tail_tol = kDefaultTailTol);
StateVector nonlinear_bg(double k, cxd eta, const PhaseFn& phi,
                         double tail_tol = kDefaultTailTol);

// --- Fock-space realizations ------------------------------------------------

// Binomial state on n = 0..M, amplitudes
// (1-|eta|^2)^{M/2} sqrt(C(M,n)) (eta/sqrt(1-|eta|^2))^n; requires |eta| < 1.
StateVector binomial_state(int m_big, cxd eta);

// Negative binomial state, amplitudes (1-|eta|^2)^{M/2} sqrt(C(M+n-1,n)) eta^n;
// identical to perelomov(k = M/2, eta) up to basis labelling.
StateVector negative_binomial_state(int m_big, cxd eta,
                                    double tail_tol = kDefaultTailTol);

// Perelomov k=1/4 (k=3/4) amplitudes embedded at even (odd) Fock indices.
StateVector squeezed_vacuum(cxd eta, double tail_tol = kDefaultTailTol);
StateVector squeezed_first(cxd eta, double tail_tol = kDefaultTailTol);

// Harmonic-oscillator coherent state, amplitudes e^{-|a|^2/2} a^n / sqrt(n!).
StateVector ho_coherent(cxd alpha, double tail_tol = kDefaultTailTol);

} // namespace liealg
