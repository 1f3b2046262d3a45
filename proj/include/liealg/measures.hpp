#pragma once

#include <utility>
#include <vector>

#include "liealg/entangled.hpp"

namespace liealg {

// rho_1 = C C^dag or rho_2 = C^T C^bar; Hermitian, PSD, unit trace.
Matrix reduced_density(const BipartiteState& psi, int slot);

// Singular value decomposition of the coefficient matrix with a fixed phase
// convention: the largest-magnitude entry of every left and right vector is
// made real positive (ties broken by the lowest index).  The complex Schmidt
// coefficients cs then carry the phases, |cs_i| = coeffs(i).
struct Schmidt {
    Eigen::VectorXd coeffs; // singular values, descending
    Matrix left;            // columns are the slot-1 vectors
    Matrix right;           // columns are the slot-2 vectors
    Eigen::VectorXcd cs;    // coefficients in the Schmidt expansion
};

Schmidt schmidt(const BipartiteState& psi);

// lambda_pm = 1/2 +- 1/2 sqrt(1 - [1 - ((1-|g|^2)/(1+|g|^2))^{4j}]^2) for the
// symmetric two-particle parity state; analogous closed form in k for the
// Perelomov family (requires |eta0| < 1).
std::pair<double, double> lambda_closed_su2(double j, cxd gamma0);
std::pair<double, double> lambda_closed_su11(double k, cxd eta0);

// 2 sqrt(1 + [1 - r^{4j}]^2) with the same r as above.
double bell_closed_su2(double j, cxd gamma0);
double bell_closed_su11(double k, cxd eta0);

// Expectation of the CHSH operator built from dichotomic observables in the
// Schmidt basis at the optimal angle choice; defined for Schmidt rank <= 2
// (rank_error otherwise).  Agrees with 2 sqrt(1 + 4 l+ l-).
double bell_expectation(const BipartiteState& psi);

// -Tr(rho ln rho), k_B = 1.  Eigenvalues in [-1e-12, 0) are clipped to 0;
// more negative spectra raise an error.
double entropy(const Matrix& rho);

// I_c = 2 S_1 for a pure bipartite state.
double index_of_correlation(const BipartiteState& psi);

struct MeasureReport {
    std::vector<double> schmidt_coeffs;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double bell = 0.0;
    double entropy_s1 = 0.0;
    double index_ic = 0.0;
};

// Full report for a rank <= 2 state (rank_error otherwise).
MeasureReport measure(const BipartiteState& psi);

} // namespace liealg
