#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zv/special.hpp"

using namespace zv;

// Reference values computed independently with mpmath at 30 digits.
namespace {
const Complex kLogGammaA(-19.3473976626448110, 18.6797423833049935);  // z = 0.25+12.5i
const Complex kLogGammaB(-0.3892276438509467, -5.2306305502659829);   // z = -1.3+0.7i
const Complex kLogGammaC(0.4274244633599382, -2.6610774658688665);    // z = 3.5-2.25i
constexpr double kTheta20 = 1.1868948084444840;
constexpr double kTheta100 = 87.9721652317872196;
constexpr double kPsi1 = 0.0432174056066540073;
}  // namespace

TEST_CASE("log_gamma matches libm on the real axis") {
    for (double x : {0.5, 1.0, 1.5, 3.7, 10.2, 120.0}) {
        const Complex lg = log_gamma(Complex(x, 0.0));
        CHECK(lg.real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
        CHECK(std::abs(lg.imag()) < 1e-13);
    }
}

TEST_CASE("log_gamma at factorial arguments") {
    double fact = 1.0;
    for (int n = 2; n <= 12; ++n) {
        fact *= n - 1;
        CHECK(log_gamma(Complex(n, 0.0)).real() ==
              doctest::Approx(std::log(fact)).epsilon(1e-13));
    }
}

TEST_CASE("log_gamma against high-precision references") {
    CHECK(std::abs(log_gamma(Complex(0.25, 12.5)) - kLogGammaA) < 1e-11);
    CHECK(std::abs(log_gamma(Complex(-1.3, 0.7)) - kLogGammaB) < 1e-12);
    CHECK(std::abs(log_gamma(Complex(3.5, -2.25)) - kLogGammaC) < 1e-12);
}

TEST_CASE("log_gamma satisfies the recurrence and reflection identities") {
    for (Complex z : {Complex(0.3, 4.0), Complex(-2.4, 1.7), Complex(1.2, -9.0)}) {
        const Complex lhs = log_gamma(z + 1.0);
        const Complex rhs = log_gamma(z) + std::log(z);
        CHECK(std::abs(std::exp(lhs) - std::exp(rhs)) <
              1e-12 * std::abs(std::exp(lhs)));
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const Complex prod = std::exp(log_gamma(z) + log_gamma(1.0 - z));
        const Complex expect = kPi / std::sin(kPi * z);
        CHECK(std::abs(prod - expect) < 1e-11 * std::abs(expect));
    }
}

TEST_CASE("log_gamma rejects the poles") {
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-3.0, 1e-13)), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(1.0 / 0.0, 0.0)), DomainError);
}

TEST_CASE("recip_gamma vanishes at nonpositive integers and inverts Gamma") {
    for (int n = 0; n >= -5; --n)
        CHECK(std::abs(recip_gamma(Complex(n, 0.0))) < 1e-14);
    for (Complex z : {Complex(0.5, 3.0), Complex(-1.25, 0.5), Complex(4.0, -2.0)}) {
        const Complex prod = recip_gamma(z) * std::exp(log_gamma(z));
        CHECK(std::abs(prod - 1.0) < 1e-12);
    }
}

TEST_CASE("theta exact values") {
    CHECK(theta(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(theta(20.0) == doctest::Approx(kTheta20).epsilon(1e-13));
    CHECK(theta(100.0) == doctest::Approx(kTheta100).epsilon(1e-13));
}

TEST_CASE("theta asymptotic agrees with exact, order by order") {
    double prev_worst = 1e300;
    for (int order = 0; order <= 3; ++order) {
        double worst = 0.0;
        for (double t = 10.0; t <= 500.0; t += 7.3) {
            const double d = std::abs(theta(t, ThetaExpansion::asymptotic(order)) -
                                      theta(t));
            worst = std::max(worst, d);
        }
        CHECK(worst < prev_worst);
        prev_worst = worst;
    }
    CHECK(prev_worst < 1e-10);  // order 3 across t >= 10
}

TEST_CASE("theta asymptotic is rejected below its accuracy floor") {
    CHECK_THROWS_AS(theta(5.0, ThetaExpansion::asymptotic(3)), DomainError);
}

TEST_CASE("theta_derivative matches a central difference") {
    for (double t : {10.0, 25.0, 80.0, 300.0}) {
        const double h = 1e-5;
        const double fd = (theta(t + h) - theta(t - h)) / (2.0 * h);
        // The derivative is a truncated asymptotic form: slope-accurate only.
        CHECK(theta_derivative(t) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("psi reference value and positivity") {
    CHECK(psi(1.0) == doctest::Approx(kPsi1).epsilon(1e-14));
    CHECK(psi(20.0) > 0.0);
    CHECK(psi(20.0) < 1e-27);
    CHECK_THROWS_AS(psi(0.0), DomainError);
}

TEST_CASE("psi at small x via the Jacobi transformation") {
    // Independent route: Psi(x) = (1 + 2 Psi(1/x))/(2 sqrt(x)) - 1/2.
    for (double x : {0.05, 0.1, 0.3}) {
        const double via = (1.0 + 2.0 * psi(1.0 / x)) / (2.0 * std::sqrt(x)) - 0.5;
        CHECK(psi(x) == doctest::Approx(via).epsilon(1e-13));
    }
}

TEST_CASE("jacobi identity residual stays below contract on [0.05, 20]") {
    for (double x = 0.05; x <= 20.0; x += 0.37)
        CHECK(jacobi_identity_residual(x) < 1e-12);
    CHECK(jacobi_identity_residual(1.0) == doctest::Approx(0.0).epsilon(1e-15));
}
