#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "semiflight/quadrature.hpp"

using namespace semiflight;

TEST_CASE("smooth integrands") {
    auto r = integrate<double>([](double x) { return std::sin(x); }, 0.0,
                               3.14159265358979323846);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) < 1e-12);

    auto p = integrate<double>([](double x) { return x * x; }, -1.0, 2.0);
    CHECK(std::abs(p.value - 3.0) < 1e-12);
}

TEST_CASE("endpoint singularities") {
    // int_0^1 x^{-1/2} dx = 2
    auto r = integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) < 1e-11);
    // int_0^1 log(x) dx = -1
    auto l = integrate<double>([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(std::abs(l.value + 1.0) < 1e-11);
    // beta-type double singularity: int_0^1 x^{-0.7}(1-x)^{-0.3} dx = B(0.3, 0.7)
    const double b = std::tgamma(0.3) * std::tgamma(0.7) / std::tgamma(1.0);
    auto q = integrate<double>(
        [](double x) { return std::pow(x, -0.7) * std::pow(1.0 - x, -0.3); }, 0.0,
        1.0);
    CHECK(std::abs(q.value - b) < 1e-10 * b);
}

TEST_CASE("half-line with decay") {
    // int_0^inf e^{-s} ds = 1
    auto r = integrate_0_inf<double>([](double s) { return std::exp(-s); });
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    // int_0^inf s^{-1/2} e^{-s} ds = Gamma(1/2)
    auto g = integrate_0_inf<double>(
        [](double s) { return std::exp(-s) / std::sqrt(s); });
    CHECK(std::abs(g.value - std::sqrt(3.14159265358979323846)) < 1e-11);
}

TEST_CASE("complex-valued integrand") {
    // int_0^inf e^{-(1+i) s} ds = 1 / (1+i)
    const std::complex<double> z(1.0, 1.0);
    auto r = integrate_0_inf<std::complex<double>>(
        [z](double s) { return std::exp(-z * s); });
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0 / z) < 1e-12);
}
