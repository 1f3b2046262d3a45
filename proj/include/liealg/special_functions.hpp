#pragma once

namespace liealg {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln[Gamma(a)/Gamma(b)] computed as a log difference, safe for arguments
// far beyond the overflow range of Gamma itself.
double log_gamma_ratio(double a, double b);

// ln(n!)
double log_factorial(int n);

// ln C(n, m) for real n > m-1 >= -1, via log-gamma.
double log_binomial(double n, double m);

// Modified Bessel function of the first kind I_nu(x), power series.
// Valid for nu > -1 and x >= 0; terminates at 1e-17 relative accuracy.
double bessel_i(double nu, double x);

} // namespace liealg
