#include "liealg/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "liealg/errors.hpp"
#include "liealg/special_functions.hpp"

namespace liealg {

namespace {

constexpr double kPi = std::numbers::pi;
const cxd kI{0.0, 1.0};

void check_unit_disc(cxd eta) {
    if (!(std::abs(eta) < 1.0)) {
        throw std::domain_error("|eta| must lie inside the unit disc, got |eta| = " +
                                std::to_string(std::abs(eta)));
    }
}

// Normalized log-magnitude ln|a_n| and the amplitude ratio sup_{m>=n}
// |a_{m+1}|/|a_m| for one state family.  Amplitude phases are always
// exp(i n arg(param)) and are attached separately.
struct AmplitudeLaw {
    std::function<double(int)> log_abs;
    std::function<double(int)> ratio_bound;
};

AmplitudeLaw perelomov_law(double k, double abs_eta) {
    const double log_eta = std::log(abs_eta);
    const double log_norm = k * std::log1p(-abs_eta * abs_eta);
    auto log_abs = [=](int n) {
        return log_norm + 0.5 * (log_gamma_ratio(2.0 * k + n, 2.0 * k) - log_factorial(n)) +
               n * log_eta;
    };
    auto ratio_bound = [=](int n) {
        if (2.0 * k <= 1.0) return abs_eta;
        return abs_eta * std::sqrt((n + 2.0 * k) / (n + 1.0));
    };
    return {log_abs, ratio_bound};
}

AmplitudeLaw bg_law(double k, double abs_eta) {
    const double log_eta = std::log(abs_eta);
    const double nu = 2.0 * k - 1.0;
    const double log_norm = 0.5 * (nu * log_eta - std::log(bessel_i(nu, 2.0 * abs_eta)));
    auto log_abs = [=](int n) {
        return log_norm - 0.5 * (log_factorial(n) + log_gamma(n + 2.0 * k)) + n * log_eta;
    };
    auto ratio_bound = [=](int n) {
        return abs_eta / std::sqrt((n + 1.0) * (n + 2.0 * k));
    };
    return {log_abs, ratio_bound};
}

AmplitudeLaw ho_law(double abs_alpha) {
    const double log_alpha = std::log(abs_alpha);
    const double log_norm = -0.5 * abs_alpha * abs_alpha;
    auto log_abs = [=](int n) { return log_norm - 0.5 * log_factorial(n) + n * log_alpha; };
    auto ratio_bound = [=](int n) { return abs_alpha / std::sqrt(n + 1.0); };
    return {log_abs, ratio_bound};
}

// Smallest kept index N such that the last kept amplitude is already below
// tail_tol/(1+|param|) and the geometric bound on the neglected probability
// mass is below tail_tol.  The amplitude-level criterion keeps lowering-
// operator residuals of truncated eigenstates at the tail_tol scale.
struct Truncation {
    int n_max;
    double tail_mass;
};

Truncation choose_truncation(double abs_param, double tail_tol, const AmplitudeLaw& law,
                             const char* family) {
    const double log_cut = std::log(tail_tol / (1.0 + abs_param));
    for (int n = 0; n < kMaxBasisSize; ++n) {
        if (law.log_abs(n) > log_cut) continue;
        const double r = law.ratio_bound(n + 1);
        if (r >= 1.0) continue;
        const double tail = std::exp(2.0 * law.log_abs(n + 1)) / (1.0 - r * r);
        if (tail < tail_tol) {
            return {n, tail};
        }
    }
    throw truncation_error(std::string(family) +
                           ": tail tolerance unreachable within the basis-size cap " +
                           std::to_string(kMaxBasisSize));
}

// Amplitudes exp(log_abs(n)) * exp(i n arg) for n = 0..n_max.
Vector law_amplitudes(const AmplitudeLaw& law, double arg, int n_max) {
    Vector amps(n_max + 1);
    double phase = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        amps(n) = std::exp(law.log_abs(n)) * std::exp(cxd(0.0, phase));
        phase = std::fmod(phase + arg, 2.0 * kPi);
    }
    return amps;
}

void check_finite_param(cxd z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument(std::string(who) + ": parameter must be finite");
    }
}

StateVector combine_parity_branches(IrrepLabel label, cxd w_minus, const Vector& branch_minus,
                                    cxd w_plus, const Vector& branch_plus, StateMeta meta) {
    Vector amps = w_minus * branch_minus + w_plus * branch_plus;
    return StateVector(label, std::move(amps), std::move(meta));
}

Vector su2_amplitudes(double j, cxd gamma) {
    const int dim = IrrepLabel::su2(j).su2_dim();
    const double twoj = static_cast<double>(dim - 1);
    Vector amps = Vector::Zero(dim);
    if (gamma == cxd(0.0, 0.0)) {
        amps(dim - 1) = 1.0;
        return amps;
    }
    const double log_g = std::log(std::abs(gamma));
    const double arg_g = std::arg(gamma);
    const double log_norm = -j * std::log1p(std::norm(gamma));
    double phase = 0.0;
    for (int m = 0; m < dim; ++m) {
        // expansion index m lives at number index 2j - m
        const double log_abs = log_norm + 0.5 * log_binomial(twoj, m) + m * log_g;
        amps(dim - 1 - m) = std::exp(log_abs) * std::exp(cxd(0.0, phase));
        phase = std::fmod(phase + arg_g, 2.0 * kPi);
    }
    return amps;
}

} // namespace

StateVector::StateVector(IrrepLabel label, Vector amplitudes, StateMeta meta)
    : label_(label), amps_(std::move(amplitudes)), meta_(std::move(meta)) {
    if (amps_.size() < 1) {
        throw std::invalid_argument("StateVector: empty amplitude vector");
    }
    if (!amps_.allFinite()) {
        throw std::invalid_argument("StateVector: non-finite amplitude");
    }
    const double n = amps_.norm();
    if (n < 1e-14) {
        throw std::invalid_argument("StateVector: amplitude vector has zero norm");
    }
    amps_ /= n;
}

cxd su2_param(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("su2_param: angles must be finite");
    }
    if (std::abs(theta - kPi) < 1e-15) {
        throw std::domain_error(
            "su2_param: theta = pi is singular; build the antipodal basis state directly");
    }
    return std::exp(cxd(0.0, phi)) * std::tan(0.5 * theta);
}

cxd su11_param(double r, double theta) {
    if (!std::isfinite(r) || !std::isfinite(theta)) {
        throw std::invalid_argument("su11_param: arguments must be finite");
    }
    return std::exp(cxd(0.0, theta)) * std::tanh(r);
}

StateVector basis_state(IrrepLabel label, int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    Vector amps = Vector::Zero(dim);
    amps(index) = 1.0;
    return StateVector(label, std::move(amps), {"basis", 0.0});
}

StateVector embedded(const StateVector& s, int dim) {
    if (dim < s.dim()) {
        throw std::invalid_argument("embedded: target dimension smaller than the state");
    }
    Vector amps = Vector::Zero(dim);
    amps.head(s.dim()) = s.amplitudes();
    return StateVector(s.label(), std::move(amps), s.meta());
}

StateVector truncated(const StateVector& s, int dim) {
    if (dim < 1 || dim > s.dim()) {
        throw std::invalid_argument("truncated: invalid target dimension");
    }
    Vector amps = s.amplitudes().head(dim);
    StateMeta meta = s.meta();
    meta.tail_mass += 1.0 - amps.squaredNorm();
    return StateVector(s.label(), std::move(amps), std::move(meta));
}

cxd overlap(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap: dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(overlap(a, b));
}

StateVector su2_coherent(double j, cxd gamma) {
    check_finite_param(gamma, "su2_coherent");
    return StateVector(IrrepLabel::su2(j), su2_amplitudes(j, gamma), {"su2", 0.0});
}

StateVector su2_parity_coherent(double j, cxd gamma) {
    check_finite_param(gamma, "su2_parity_coherent");
    const IrrepLabel label = IrrepLabel::su2(j);
    const int twoj = label.su2_dim() - 1;
    const double sign = (twoj % 2 == 0) ? 1.0 : -1.0; // (-1)^{2j}
    const cxd sqrt_half = 1.0 / std::sqrt(2.0);
    return combine_parity_branches(
        label, sqrt_half * std::exp(-kI * (kPi / 4.0)), su2_amplitudes(j, -kI * sign * gamma),
        sqrt_half * std::exp(kI * (kPi / 4.0)), su2_amplitudes(j, kI * sign * gamma),
        {"su2-parity", 0.0});
}

StateVector nonlinear_su2(double j, cxd gamma, const PhaseFn& theta) {
    check_finite_param(gamma, "nonlinear_su2");
    const IrrepLabel label = IrrepLabel::su2(j);
    Vector amps = su2_amplitudes(j, gamma);
    const int dim = label.su2_dim();
    // phase exp[+i sum_{x=r}^{2j-1} theta(x)] on number index r
    double sum = 0.0;
    for (int r = dim - 2; r >= 0; --r) {
        sum = std::fmod(sum + theta(r), 2.0 * kPi);
        amps(r) *= std::exp(cxd(0.0, sum));
    }
    return StateVector(label, std::move(amps), {"nonlinear-su2", 0.0});
}

StateVector perelomov_fixed(double k, cxd eta, int n_max) {
    check_finite_param(eta, "perelomov");
    check_unit_disc(eta);
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, n_max + 1, 0);
    }
    const AmplitudeLaw law = perelomov_law(k, std::abs(eta));
    return StateVector(label, law_amplitudes(law, std::arg(eta), n_max), {"perelomov", 0.0});
}

StateVector perelomov(double k, cxd eta, double tail_tol) {
    check_finite_param(eta, "perelomov");
    check_unit_disc(eta);
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    const AmplitudeLaw law = perelomov_law(k, std::abs(eta));
    const Truncation t = choose_truncation(std::abs(eta), tail_tol, law, "perelomov");
    return StateVector(label, law_amplitudes(law, std::arg(eta), t.n_max),
                       {"perelomov", t.tail_mass});
}

StateVector perelomov_parity(double k, cxd eta, double tail_tol) {
    check_finite_param(eta, "perelomov_parity");
    check_unit_disc(eta);
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    const AmplitudeLaw law = perelomov_law(k, std::abs(eta));
    const Truncation t = choose_truncation(std::abs(eta), tail_tol, law, "perelomov_parity");
    const cxd sqrt_half = 1.0 / std::sqrt(2.0);
    return combine_parity_branches(
        label, sqrt_half * std::exp(kI * (kPi / 4.0)),
        law_amplitudes(law, std::arg(-kI * eta), t.n_max),
        sqrt_half * std::exp(-kI * (kPi / 4.0)),
        law_amplitudes(law, std::arg(kI * eta), t.n_max), {"perelomov-parity", t.tail_mass});
}

StateVector barut_girardello_fixed(double k, cxd eta, int n_max) {
    check_finite_param(eta, "barut_girardello");
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, n_max + 1, 0);
    }
    const AmplitudeLaw law = bg_law(k, std::abs(eta));
    return StateVector(label, law_amplitudes(law, std::arg(eta), n_max),
                       {"barut-girardello", 0.0});
}

StateVector barut_girardello(double k, cxd eta, double tail_tol) {
    check_finite_param(eta, "barut_girardello");
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    const AmplitudeLaw law = bg_law(k, std::abs(eta));
    const Truncation t = choose_truncation(std::abs(eta), tail_tol, law, "barut_girardello");
    return StateVector(label, law_amplitudes(law, std::arg(eta), t.n_max),
                       {"barut-girardello", t.tail_mass});
}

StateVector bg_parity(double k, cxd eta, double tail_tol) {
    check_finite_param(eta, "bg_parity");
    const IrrepLabel label = IrrepLabel::su11(k);
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    const AmplitudeLaw law = bg_law(k, std::abs(eta));
    const Truncation t = choose_truncation(std::abs(eta), tail_tol, law, "bg_parity");
    const cxd sqrt_half = 1.0 / std::sqrt(2.0);
    return combine_parity_branches(
        label, sqrt_half * std::exp(kI * (kPi / 4.0)),
        law_amplitudes(law, std::arg(-kI * eta), t.n_max),
        sqrt_half * std::exp(-kI * (kPi / 4.0)),
        law_amplitudes(law, std::arg(kI * eta), t.n_max), {"bg-parity", t.tail_mass});
}

namespace {

// exp[-i sum_{m=0}^{n-1} phi(m)] applied on top of a base state.
StateVector apply_su11_phase(StateVector base, const PhaseFn& phi, const char* family) {
    Vector amps = base.amplitudes();
    double sum = 0.0;
    for (int n = 1; n < base.dim(); ++n) {
        sum = std::fmod(sum + phi(n - 1), 2.0 * kPi);
        amps(n) *= std::exp(cxd(0.0, -sum));
    }
    StateMeta meta = base.meta();
    meta.family = family;
    return StateVector(base.label(), std::move(amps), std::move(meta));
}

} // namespace

StateVector nonlinear_perelomov(double k, cxd eta, const PhaseFn& phi, double tail_tol) {
    return apply_su11_phase(perelomov(k, eta, tail_tol), phi, "nonlinear-perelomov");
}

StateVector nonlinear_bg(double k, cxd eta, const PhaseFn& phi, double tail_tol) {
    return apply_su11_phase(barut_girardello(k, eta, tail_tol), phi, "nonlinear-bg");
}

StateVector binomial_state(int m_big, cxd eta) {
    if (m_big < 1) {
        throw std::invalid_argument("binomial_state: M must be a positive integer");
    }
    check_finite_param(eta, "binomial_state");
    check_unit_disc(eta);
    const IrrepLabel label = IrrepLabel::fock();
    const int dim = m_big + 1;
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, dim, 0);
    }
    const double abs_eta = std::abs(eta);
    const double log_tilt = std::log(abs_eta) - 0.5 * std::log1p(-abs_eta * abs_eta);
    const double log_norm = 0.5 * m_big * std::log1p(-abs_eta * abs_eta);
    const double m_real = static_cast<double>(m_big);
    Vector amps(dim);
    double phase = 0.0;
    const double arg_eta = std::arg(eta);
    for (int n = 0; n < dim; ++n) {
        const double log_abs = log_norm + 0.5 * log_binomial(m_real, n) + n * log_tilt;
        amps(n) = std::exp(log_abs) * std::exp(cxd(0.0, phase));
        phase = std::fmod(phase + arg_eta, 2.0 * kPi);
    }
    return StateVector(label, std::move(amps), {"binomial", 0.0});
}

StateVector negative_binomial_state(int m_big, cxd eta, double tail_tol) {
    if (m_big < 1) {
        throw std::invalid_argument("negative_binomial_state: M must be a positive integer");
    }
    check_finite_param(eta, "negative_binomial_state");
    check_unit_disc(eta);
    const IrrepLabel label = IrrepLabel::fock();
    if (eta == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    // Same amplitude law as perelomov with k = M/2.
    const AmplitudeLaw law = perelomov_law(0.5 * m_big, std::abs(eta));
    const Truncation t = choose_truncation(std::abs(eta), tail_tol, law, "negative_binomial");
    return StateVector(label, law_amplitudes(law, std::arg(eta), t.n_max),
                       {"negative-binomial", t.tail_mass});
}

namespace {

StateVector embed_squeezed(const StateVector& base, int offset, const char* family) {
    Vector amps = Vector::Zero(2 * base.dim() - 1 + offset);
    for (int n = 0; n < base.dim(); ++n) {
        amps(2 * n + offset) = base.amplitude(n);
    }
    StateMeta meta = base.meta();
    meta.family = family;
    return StateVector(IrrepLabel::fock(), std::move(amps), std::move(meta));
}

} // namespace

StateVector squeezed_vacuum(cxd eta, double tail_tol) {
    return embed_squeezed(perelomov(0.25, eta, tail_tol), 0, "squeezed-vacuum");
}

StateVector squeezed_first(cxd eta, double tail_tol) {
    return embed_squeezed(perelomov(0.75, eta, tail_tol), 1, "squeezed-first");
}

StateVector ho_coherent(cxd alpha, double tail_tol) {
    check_finite_param(alpha, "ho_coherent");
    const IrrepLabel label = IrrepLabel::fock();
    if (alpha == cxd(0.0, 0.0)) {
        return basis_state(label, 1, 0);
    }
    const AmplitudeLaw law = ho_law(std::abs(alpha));
    const Truncation t = choose_truncation(std::abs(alpha), tail_tol, law, "ho_coherent");
    return StateVector(label, law_amplitudes(law, std::arg(alpha), t.n_max),
                       {"ho-coherent", t.tail_mass});
}

} // namespace liealg
