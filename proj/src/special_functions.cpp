#include "liealg/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liealg {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma requires a positive argument, got " +
                                std::to_string(x));
    }
    return std::lgamma(x);
}

double log_gamma_ratio(double a, double b) {
    return log_gamma(a) - log_gamma(b);
}

double log_factorial(int n) {
    if (n < 0) {
        throw std::domain_error("log_factorial requires n >= 0");
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(double n, double m) {
    return log_gamma(n + 1.0) - log_gamma(m + 1.0) - log_gamma(n - m + 1.0);
}

double bessel_i(double nu, double x) {
    if (x < 0.0) {
        throw std::domain_error("bessel_i requires x >= 0");
    }
    if (nu <= -1.0) {
        throw std::domain_error("bessel_i requires nu > -1");
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_i diverges at x = 0 for nu < 0");
    }
    const double h = 0.5 * x;
    // Leading term (h^nu / Gamma(nu+1)) in log space to keep nu < 0 exact.
    double term = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
    double sum = term;
    const double h2 = h * h;
    for (int m = 1; m < 1000; ++m) {
        term *= h2 / (static_cast<double>(m) * (static_cast<double>(m) + nu));
        sum += term;
        if (term < 1e-17 * sum) {
            return sum;
        }
    }
    throw std::runtime_error("bessel_i series did not converge; x too large");
}

} // namespace liealg
