#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace liealg {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Real-valued phase function on basis indices, theta(n) in radians.
using PhaseFn = std::function<double(int)>;

// Basis labelling convention used throughout: row index n equals the
// eigenvalue of the number operator, ascending.  For su(2) that is
// M = J_z + j (so row 2j is the highest-weight state |jj>), for su(1,1)
// it is N = K_z - k (row 0 is the lowest-weight state |k 0>), and for a
// bosonic Fock space it is the photon number.
enum class BasisKind { Su2, Su11, Fock };

struct IrrepLabel {
    BasisKind kind = BasisKind::Fock;
    double param = 0.0; // j for Su2, k for Su11, unused for Fock

    static IrrepLabel su2(double j);  // requires 2j a positive integer
    static IrrepLabel su11(double k); // requires k > 0
    static IrrepLabel fock() { return IrrepLabel{BasisKind::Fock, 0.0}; }

    double j() const;
    double k() const;
    int su2_dim() const; // 2j + 1

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// Raising/lowering/diagonal generator triple on a finite basis.
struct LadderOps {
    Matrix plus;
    Matrix minus;
    Matrix z;

    int dim() const { return static_cast<int>(z.rows()); }
};

// su(2) generators on the (2j+1)-dimensional basis described above:
// plus[m+1][m] = sqrt((2j-m)(m+1)), z = diag(m - j).
// [J+, J-] = 2 Jz and [Jz, J±] = ±J± hold exactly.
LadderOps su2_generators(double j);

// su(1,1) generators truncated at n_max (dimension n_max+1):
// plus[n+1][n] = sqrt((n+1)(n+2k)), z = diag(n + k).
// [K+, K-] = -2 Kz holds on rows/columns 0..n_max-1; the top row is
// corrupted by the truncation.
LadderOps su11_generators(double k, int n_max);

// diag((-1)^n); involutive and Hermitian by construction.
Matrix parity_operator(int dim);

// Parity dressing: plus -> plus * P, minus -> P * minus, z unchanged.
// The dressed triple satisfies the same commutation relations.
LadderOps dress_parity(const LadderOps& gens, const Matrix& parity);

// Phase dressing with U = diag(exp(-i theta(n))):
// plus -> plus * U, minus -> U^dagger * minus, z unchanged.
// theta(n) = pi*n reproduces the parity dressing.
LadderOps dress_phase(const LadderOps& gens, const PhaseFn& theta);

Matrix commutator(const Matrix& a, const Matrix& b);

// Matrix exponential via scaling-and-squaring with a diagonal Pade
// approximant; inputs are scaled until the 1-norm is at most 0.5.
// Anti-Hermitian input yields a unitary result to ~1e-12.
Matrix mat_exp(const Matrix& a);

} // namespace liealg
