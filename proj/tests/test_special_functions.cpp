#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liealg/special_functions.hpp"

using namespace liealg;

TEST_CASE("log_gamma matches factorials and rejects non-positive arguments") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma_ratio stays finite far beyond Gamma overflow") {
    // ln[Gamma(2k+n)/Gamma(2k)] telescopes to sum ln(2k+i)
    const double k = 0.75;
    const int n = 10000;
    double direct = 0.0;
    for (int i = 0; i < n; ++i) direct += std::log(2.0 * k + i);
    const double viaratio = log_gamma_ratio(2.0 * k + n, 2.0 * k);
    CHECK(std::isfinite(viaratio));
    CHECK(viaratio == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("log_binomial agrees with exact Pascal values") {
    long long pascal[21][21] = {};
    for (int n = 0; n <= 20; ++n) {
        pascal[n][0] = 1;
        for (int m = 1; m <= n; ++m) {
            pascal[n][m] = pascal[n - 1][m - 1] + (m <= n - 1 ? pascal[n - 1][m] : 0);
        }
    }
    for (int n = 1; n <= 20; ++n) {
        for (int m = 0; m <= n; ++m) {
            CHECK(std::exp(log_binomial(n, m)) ==
                  doctest::Approx(static_cast<double>(pascal[n][m])).epsilon(1e-12));
        }
    }
}

TEST_CASE("bessel_i agrees with the standard library") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double x : {0.1, 1.0, 4.0, 6.0, 20.0}) {
            CHECK(bessel_i(nu, x) ==
                  doctest::Approx(std::cyl_bessel_i(nu, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("bessel_i at negative half order uses the cosh closed form") {
    for (double x : {0.3, 1.0, 2.5, 8.0}) {
        const double expected = std::sqrt(2.0 / (std::numbers::pi * x)) * std::cosh(x);
        CHECK(bessel_i(-0.5, x) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("series sum x^2n/(n!)^2 equals I_0(2x)") {
    for (double x : {0.25, 0.5, 1.5, 3.0}) {
        double sum = 0.0;
        double term = 1.0;
        for (int n = 0; n < 200 && term > 1e-18 * sum; ++n) {
            sum += term;
            term *= (x * x) / ((n + 1.0) * (n + 1.0));
        }
        CHECK(sum == doctest::Approx(bessel_i(0.0, 2.0 * x)).epsilon(1e-13));
    }
}

TEST_CASE("bessel_i edge cases") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(1.5, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(-1.5, 1.0), std::domain_error);
}
