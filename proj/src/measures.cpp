#include "liealg/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

// Schmidt eigenvalues below this are treated as absent when deciding whether
// the two-term Bell machinery applies.
constexpr double kRankTol = 1e-10;

void check_normalized(const BipartiteState& psi) {
    if (std::abs(psi.coeffs().norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("bipartite state is not normalized");
    }
}

// Rotate each column so its largest-magnitude entry is real positive,
// ties broken by the lowest index.
void fix_column_phases(Matrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double a = std::abs(m(r, c));
            if (a > best + 1e-15) {
                best = a;
                imax = r;
            }
        }
        if (best > 0.0) {
            m.col(c) /= m(imax, c) / std::abs(m(imax, c));
        }
    }
}

} // namespace

Matrix reduced_density(const BipartiteState& psi, int slot) {
    check_normalized(psi);
    const Matrix& c = psi.coeffs();
    Matrix rho;
    if (slot == 1) {
        rho = c * c.adjoint();
    } else if (slot == 2) {
        rho = c.transpose() * c.conjugate();
    } else {
        throw std::invalid_argument("reduced_density: slot must be 1 or 2");
    }
    // symmetrize away the multiplication round-off
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return rho;
}

Schmidt schmidt(const BipartiteState& psi) {
    check_normalized(psi);
    const Matrix& c = psi.coeffs();
    Schmidt out;
    if (c.rows() <= 32 && c.cols() <= 32) {
        Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.coeffs = svd.singularValues();
        out.left = svd.matrixU();
        out.right = svd.matrixV().conjugate();
    } else {
        Eigen::BDCSVD<Matrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.coeffs = svd.singularValues();
        out.left = svd.matrixU();
        out.right = svd.matrixV().conjugate();
    }
    // C = U diag(s) V^H = sum_i s_i u_i w_i^T with w_i = conj(v_i); the phase
    // convention moves those phases into cs.
    fix_column_phases(out.left);
    fix_column_phases(out.right);
    out.cs.resize(out.coeffs.size());
    for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
        out.cs(i) = out.left.col(i).dot(c * out.right.col(i).conjugate());
    }
    return out;
}

namespace {

double symmetric_ratio_power(double modulus, double four_lk) {
    const double m2 = modulus * modulus;
    const double r = (1.0 - m2) / (1.0 + m2);
    // four_lk is an even integer for su(2); for su(1,1) |eta| < 1 keeps r > 0.
    return std::pow(std::abs(r), four_lk);
}

std::pair<double, double> lambda_from_ratio(double rp) {
    const double x = 1.0 - rp;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    return {0.5 + 0.5 * s, 0.5 - 0.5 * s};
}

} // namespace

std::pair<double, double> lambda_closed_su2(double j, cxd gamma0) {
    IrrepLabel::su2(j);
    return lambda_from_ratio(symmetric_ratio_power(std::abs(gamma0), 4.0 * j));
}

std::pair<double, double> lambda_closed_su11(double k, cxd eta0) {
    IrrepLabel::su11(k);
    if (!(std::abs(eta0) < 1.0)) {
        throw std::domain_error("lambda_closed_su11: |eta0| must lie inside the unit disc");
    }
    return lambda_from_ratio(symmetric_ratio_power(std::abs(eta0), 4.0 * k));
}

double bell_closed_su2(double j, cxd gamma0) {
    IrrepLabel::su2(j);
    const double x = 1.0 - symmetric_ratio_power(std::abs(gamma0), 4.0 * j);
    return 2.0 * std::sqrt(1.0 + x * x);
}

double bell_closed_su11(double k, cxd eta0) {
    IrrepLabel::su11(k);
    if (!(std::abs(eta0) < 1.0)) {
        throw std::domain_error("bell_closed_su11: |eta0| must lie inside the unit disc");
    }
    const double x = 1.0 - symmetric_ratio_power(std::abs(eta0), 4.0 * k);
    return 2.0 * std::sqrt(1.0 + x * x);
}

double bell_expectation(const BipartiteState& psi) {
    const Schmidt dec = schmidt(psi);
    const Eigen::Index rank = dec.coeffs.size();
    for (Eigen::Index i = 2; i < rank; ++i) {
        if (dec.coeffs(i) * dec.coeffs(i) > kRankTol) {
            throw rank_error(
                "bell_expectation: Schmidt rank exceeds 2; the dichotomic-observable "
                "construction is undefined");
        }
    }
    const cxd c_plus = dec.cs(0);
    const cxd c_minus = rank > 1 ? dec.cs(1) : cxd{0.0, 0.0};
    const double phi_diff = std::arg(c_plus) - (std::abs(c_minus) > 0.0 ? std::arg(c_minus) : 0.0);

    // The dichotomic observables act inside the span of the top two Schmidt
    // vectors; each is U [[cos l, sin l e^{i phi}], [sin l e^{-i phi}, -cos l]] U^dag
    // with U = [|+>, |->].  Their expectation on the state reduces to 2x2
    // algebra on the block Y = U1^dag C conj(U2).
    auto theta_block = [](double l, double phi) {
        Eigen::Matrix2cd m;
        m << std::cos(l), std::sin(l) * std::exp(cxd(0.0, phi)),
            std::sin(l) * std::exp(cxd(0.0, -phi)), -std::cos(l);
        return m;
    };
    auto schmidt_pair = [](const Matrix& vecs) {
        Matrix u = Matrix::Zero(vecs.rows(), 2);
        u.col(0) = vecs.col(0);
        if (vecs.cols() > 1) u.col(1) = vecs.col(1);
        return u;
    };
    const Matrix u1 = schmidt_pair(dec.left);
    const Matrix u2 = schmidt_pair(dec.right);
    const Eigen::Matrix2cd y = u1.adjoint() * psi.coeffs() * u2.conjugate();

    const double c2 = 2.0 * std::abs(c_plus) * std::abs(c_minus);
    const double l2 = std::acos(1.0 / std::sqrt(1.0 + c2 * c2));
    const Eigen::Matrix2cd t1 = theta_block(0.0, phi_diff);
    const Eigen::Matrix2cd t1p = theta_block(0.5 * std::numbers::pi, phi_diff);
    const Eigen::Matrix2cd t2 = theta_block(l2, 0.0);
    const Eigen::Matrix2cd t2p = theta_block(-l2, 0.0);

    auto term = [&](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
        return (y.adjoint() * a * y * b.transpose()).trace().real();
    };
    return term(t1, t2) + term(t1, t2p) + term(t1p, t2) - term(t1p, t2p);
}

double entropy(const Matrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("entropy: density matrix must be square");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("entropy: density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p < -1e-10) {
            throw std::invalid_argument("entropy: density matrix has a negative eigenvalue " +
                                        std::to_string(p));
        }
        if (p < 0.0) p = 0.0;
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double index_of_correlation(const BipartiteState& psi) {
    return 2.0 * entropy(reduced_density(psi, 1));
}

MeasureReport measure(const BipartiteState& psi) {
    const Schmidt dec = schmidt(psi);
    MeasureReport rep;
    rep.schmidt_coeffs.assign(dec.coeffs.data(), dec.coeffs.data() + dec.coeffs.size());
    rep.lambda_plus = dec.coeffs(0) * dec.coeffs(0);
    rep.lambda_minus = dec.coeffs.size() > 1 ? dec.coeffs(1) * dec.coeffs(1) : 0.0;
    rep.bell = bell_expectation(psi);
    rep.entropy_s1 = entropy(reduced_density(psi, 1));
    rep.index_ic = 2.0 * rep.entropy_s1;
    return rep;
}

} // namespace liealg
