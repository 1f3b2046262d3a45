#include "liealg/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liealg {

namespace {

bool is_half_integer(double j) {
    const double twoj = 2.0 * j;
    return std::abs(twoj - std::round(twoj)) < 1e-9;
}

void check_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
}

} // namespace

IrrepLabel IrrepLabel::su2(double j) {
    if (!is_half_integer(j) || j < 0.5) {
        throw std::invalid_argument(
            "invalid irrep: j must be a positive half-integer, got " + std::to_string(j));
    }
    return IrrepLabel{BasisKind::Su2, j};
}

IrrepLabel IrrepLabel::su11(double k) {
    if (!(k > 0.0)) {
        throw std::invalid_argument(
            "invalid irrep: Bargmann index k must be positive, got " + std::to_string(k));
    }
    return IrrepLabel{BasisKind::Su11, k};
}

double IrrepLabel::j() const {
    if (kind != BasisKind::Su2) throw std::logic_error("label is not an su(2) irrep");
    return param;
}

double IrrepLabel::k() const {
    if (kind != BasisKind::Su11) throw std::logic_error("label is not an su(1,1) irrep");
    return param;
}

int IrrepLabel::su2_dim() const {
    return static_cast<int>(std::lround(2.0 * j())) + 1;
}

LadderOps su2_generators(double j) {
    const IrrepLabel label = IrrepLabel::su2(j);
    const int dim = label.su2_dim();
    LadderOps g;
    g.plus = Matrix::Zero(dim, dim);
    g.minus = Matrix::Zero(dim, dim);
    g.z = Matrix::Zero(dim, dim);
    const double twoj = static_cast<double>(dim - 1);
    for (int m = 0; m + 1 < dim; ++m) {
        const double c = std::sqrt((twoj - m) * (m + 1.0));
        g.plus(m + 1, m) = c;
        g.minus(m, m + 1) = c;
    }
    for (int m = 0; m < dim; ++m) {
        g.z(m, m) = static_cast<double>(m) - j;
    }
    return g;
}

LadderOps su11_generators(double k, int n_max) {
    IrrepLabel::su11(k);
    if (n_max < 1) {
        throw std::invalid_argument("su11_generators: n_max must be at least 1");
    }
    const int dim = n_max + 1;
    LadderOps g;
    g.plus = Matrix::Zero(dim, dim);
    g.minus = Matrix::Zero(dim, dim);
    g.z = Matrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double c = std::sqrt((n + 1.0) * (n + 2.0 * k));
        g.plus(n + 1, n) = c;
        g.minus(n, n + 1) = c;
    }
    for (int n = 0; n < dim; ++n) {
        g.z(n, n) = n + k;
    }
    return g;
}

Matrix parity_operator(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("parity_operator: dim must be at least 1");
    }
    Matrix p = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    }
    return p;
}

LadderOps dress_parity(const LadderOps& gens, const Matrix& parity) {
    if (parity.rows() != gens.z.rows() || parity.cols() != gens.z.cols()) {
        throw std::invalid_argument("dress_parity: dimension mismatch");
    }
    LadderOps out;
    out.plus = gens.plus * parity;
    out.minus = parity * gens.minus;
    out.z = gens.z;
    return out;
}

LadderOps dress_phase(const LadderOps& gens, const PhaseFn& theta) {
    const int dim = gens.dim();
    Matrix u = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        u(n, n) = std::exp(cxd(0.0, -theta(n)));
    }
    LadderOps out;
    out.plus = gens.plus * u;
    out.minus = u.adjoint() * gens.minus;
    out.z = gens.z;
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

Matrix mat_exp(const Matrix& a) {
    check_square(a, "mat_exp");
    if (!a.allFinite()) {
        throw std::invalid_argument("mat_exp: input has non-finite entries");
    }
    const int dim = static_cast<int>(a.rows());
    const Matrix id = Matrix::Identity(dim, dim);

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    const Matrix b = a * std::ldexp(1.0, -squarings);

    // Diagonal [6/6] Pade approximant; for ||b||_1 <= 0.5 the local error
    // is far below double precision.
    constexpr double c1 = 1.0 / 2.0;
    constexpr double c2 = 5.0 / 44.0;
    constexpr double c3 = 1.0 / 66.0;
    constexpr double c4 = 1.0 / 792.0;
    constexpr double c5 = 1.0 / 15840.0;
    constexpr double c6 = 1.0 / 665280.0;
    const Matrix b2 = b * b;
    const Matrix b4 = b2 * b2;
    const Matrix b6 = b4 * b2;
    const Matrix u = b * (c1 * id + c3 * b2 + c5 * b4);
    const Matrix v = id + c2 * b2 + c4 * b4 + c6 * b6;

    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

} // namespace liealg
