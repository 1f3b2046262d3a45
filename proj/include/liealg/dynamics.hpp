#pragma once

#include "liealg/entangled.hpp"

namespace liealg {

// Number-diagonal Hamiltonians (hbar = 1).  Evolution is exact diagonal
// phase multiplication exp(-i E(n) t) in the number basis; no integrator.

// H = omega Jz + (lambda / 2j) Jz^2 on the su(2) basis, E(m) with Jz = m - j.
struct RotatorHamiltonian {
    double omega = 0.0;
    double lambda = 0.0;
    double j = 0.5;

    double energy(int m) const {
        const double u = m - j;
        return omega * u + lambda / (2.0 * j) * u * u;
    }
};

// H = omega Kz + lambda K+ K- on a truncated su(1,1) basis,
// E(n) = omega (n + k) + lambda n (n + 2k - 1).
struct KerrHamiltonian {
    double omega = 0.0;
    double lambda = 0.0;
    double k = 0.5;

    double energy(int n) const {
        return omega * (n + k) + lambda * n * (n + 2.0 * k - 1.0);
    }
};

// H = c1 N1^2 + c2 N2^2 + c3 N1 N2 in the two number operators.
struct CrossNumberHamiltonian {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    double energy(int n1, int n2) const {
        const double a = n1, b = n2;
        return c1 * a * a + c2 * b * b + c3 * a * b;
    }
};

StateVector evolve(const StateVector& s, const RotatorHamiltonian& h, double t);
StateVector evolve(const StateVector& s, const KerrHamiltonian& h, double t);
BipartiteState evolve(const BipartiteState& s, const CrossNumberHamiltonian& h, double t);

// C[n1][n2] -> exp(-i chi n1 n2) C[n1][n2]; Fock bases only.
BipartiteState kerr_cross(const BipartiteState& s, double chi);

// Cross-number evolution of the product |j,-i g1>|j,-i g2> with
// c2 = c1, c3 = 2 c1 at t = pi/(2 c1); asserts equality with
// entangled_su2_parity to 1e-10 and returns the evolved state.
// Only integer j is supported.
BipartiteState generate_entangled_su2(double j, cxd gamma1, cxd gamma2, double chi1,
                                      double* deviation_out = nullptr);

enum class Su11Family { Perelomov, BarutGirardello };

// Same construction from |k,+i e1>|k,+i e2>; gate 1e-9 (truncation-limited).
BipartiteState generate_entangled_su11(double k, cxd eta1, cxd eta2, double lambda1,
                                       Su11Family family,
                                       double tail_tol = kDefaultTailTol,
                                       double* deviation_out = nullptr);

// Coupling-only evolution (c1 = c2 = 0) of a coherent product at
// t = pi/c3, compared against the renormalized two-branch template
// (1/2)[(|g1>+(-1)^{2j}|-g1>)(x)|g2> + ((-1)^{2j}|g1>-|-g1>)(x)|-g2>].
BipartiteState generate_cat_su2(double j, cxd gamma1, cxd gamma2, double chi3,
                                double* deviation_out = nullptr);

// Analogous su(1,1) case: (1/2)[(|e1>+|-e1>)(x)|e2> + (|e1>-|-e1>)(x)|-e2>].
BipartiteState generate_cat_su11(double k, cxd eta1, cxd eta2, double lambda3,
                                 Su11Family family, double tail_tol = kDefaultTailTol,
                                 double* deviation_out = nullptr);

} // namespace liealg
