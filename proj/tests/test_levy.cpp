#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "semiflight/levy.hpp"
#include "semiflight/special.hpp"
#include "semiflight/stats.hpp"

using namespace semiflight;

TEST_CASE("BernsteinSpec validation") {
    CHECK_THROWS_AS(BernsteinSpec::stable(1.0), std::domain_error);
    CHECK_THROWS_AS(BernsteinSpec::stable(0.0), std::domain_error);
    CHECK(BernsteinSpec::markov().is_markov());
    CHECK(!BernsteinSpec::stable(0.5).is_markov());
}

TEST_CASE("stable sampler: Laplace exponent at several alpha and lambda") {
    // mean of e^{-l S} must sit within 3 standard errors of e^{-l^a}
    Rng rng(101, 0);
    for (double a : {0.4, 0.5, 0.7, 0.9}) {
        for (double lam : {0.5, 1.0, 2.0}) {
            MomentAccumulator acc;
            const int n = a == 0.5 ? 1000000 : 200000;
            for (int i = 0; i < n; ++i)
                acc.add(std::exp(-lam * sample_stable(a, rng)));
            const double target = std::exp(-std::pow(lam, a));
            CHECK(std::abs(acc.mean() - target) < 3.0 * acc.stderr_mean());
        }
    }
}

TEST_CASE("stable sampler: alpha = 1/2 closed form") {
    // S = 1/(2 G^2) under E e^{-l S} = e^{-sqrt(l)}: CDF erfc(1/(2 sqrt s)).
    // (The Laplace-exponent pin above fixes the normalization.)
    Rng rng(102, 0);
    std::vector<double> sample(100000);
    for (auto& s : sample) s = sample_stable(0.5, rng);
    const double ks = ks_distance(std::move(sample), oracles::stable_half_cdf);
    CHECK(ks < 0.01);
}

TEST_CASE("stable sampler: alpha = 0.9 median against Talbot CDF inversion") {
    // CDF(s) = InvLaplace[ e^{-l^a} / l ](s): numeric-density oracle
    Rng rng(103, 0);
    std::vector<double> sample(100000);
    for (auto& s : sample) s = sample_stable(0.9, rng);
    std::sort(sample.begin(), sample.end());
    const double median = sample[sample.size() / 2];
    const double cdf_at_median = talbot_invert(
        [](std::complex<double> l) { return std::exp(-std::pow(l, 0.9)) / l; },
        median, TalbotConfig{});
    CHECK(std::abs(cdf_at_median - 0.5) < 0.01);
}

TEST_CASE("ml waiting times: survival law and Markov reduction") {
    Rng rng(104, 0);
    {
        MomentAccumulator acc;
        for (int i = 0; i < 100000; ++i)
            acc.add(sample_ml_waiting_time(1.0, 1.0, rng) > 1.0 ? 1.0 : 0.0);
        CHECK(std::abs(acc.mean() - std::exp(-1.0)) <
              3.0 * binomial_stderr(acc.mean(), acc.n));
    }
    {
        std::vector<double> sample(100000);
        for (auto& s : sample) s = sample_ml_waiting_time(0.6, 1.0, rng);
        const double ks = ks_distance(std::move(sample), [](double t) {
            return 1.0 - ml_survival(0.6, 1.0, t);
        });
        CHECK(ks < 0.01);
    }
    {
        // tail: P(J > t) t^a -> 1/Gamma(1-a) (theta = 1), checked at t = 100
        MomentAccumulator acc;
        for (int i = 0; i < 200000; ++i)
            acc.add(sample_ml_waiting_time(0.6, 1.0, rng) > 100.0 ? 1.0 : 0.0);
        const double scaled = acc.mean() * std::pow(100.0, 0.6);
        CHECK(std::abs(scaled - 1.0 / std::tgamma(0.4)) <
              0.1 / std::tgamma(0.4));
    }
}

TEST_CASE("scaling: sigma(ct) equals c^{1/a} sigma(t) in law") {
    Rng rng(105, 0);
    const double a = 0.7, c = 3.0;
    std::vector<double> x(20000), y(20000);
    // sigma(t) = t^{1/a} sigma(1): compare c^{1/a}-rescaled independent sets
    for (auto& v : x) v = std::pow(2.0, 1.0 / a) * sample_stable(a, rng);
    for (auto& v : y)
        v = std::pow(2.0 * c, 1.0 / a) * sample_stable(a, rng) / std::pow(c, 1.0 / a);
    CHECK(ks_two_sample(x, y) < 0.02);
}

TEST_CASE("passage: consistency invariants and undershoot law") {
    Rng rng(106, 0);
    const double a = 0.5, t = 1.0, eps = 1e-4;
    const auto spec = BernsteinSpec::stable(a);
    std::vector<double> ratios;
    long long creeping = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto p = sample_passage(spec, t, eps, rng);
        CHECK(p.passage_time > 0.0);
        if (p.creeping_flag) {
            ++creeping;
            continue;
        }
        CHECK(p.undershoot < t);
        CHECK(p.overshoot > t);
        CHECK(p.undershoot >= 0.0);
        ratios.push_back(p.undershoot / t);
    }
    // truncation artifact budget
    CHECK(static_cast<double>(creeping) / n < 0.01);
    const double ks = ks_distance(std::move(ratios), [&](double w) {
        return beta_reg_cdf(a, 1.0 - a, std::clamp(w, 0.0, 1.0));
    });
    CHECK(ks < 0.02);
}

TEST_CASE("passage: mean of L(t) matches t^a / Gamma(1+a)") {
    Rng rng(107, 0);
    const double a = 0.5, t = 1.0;
    MomentAccumulator acc;
    for (int i = 0; i < 50000; ++i)
        acc.add(sample_passage(BernsteinSpec::stable(a), t, 1e-4, rng).passage_time);
    const double target = std::pow(t, a) / std::tgamma(1.0 + a);
    CHECK(std::abs(acc.mean() - target) < 4.0 * acc.stderr_mean());
    // the same constant by quadrature of the renewal density
    const double integral = oracles::integrate_simpson(
        [a](double w) { return renewal_density(a, w); }, 1e-12, t, 1e-10);
    CHECK(std::abs(integral - target) < 1e-6);
}

TEST_CASE("passage: Markov spec bypasses the clock") {
    Rng rng(108, 0);
    const auto p = sample_passage(BernsteinSpec::markov(), 3.0, 1e-4, rng);
    CHECK(p.passage_time == 3.0);
    CHECK(p.undershoot == 3.0);
    CHECK(!p.creeping_flag);
}

TEST_CASE("passage: eps >= t is rejected") {
    Rng rng(109, 0);
    CHECK_THROWS_AS(sample_passage(BernsteinSpec::stable(0.5), 1.0, 1.0, rng),
                    std::invalid_argument);
}

TEST_CASE("coupled passage: pathwise bound in exact mode") {
    Rng rng(110, 0);
    const double a = 0.7, t = 1.0;
    for (int i = 0; i < 20000; ++i) {
        const auto c = sample_coupled_passage(a, 2, t, 1e-4, false, rng);
        double n2 = 0.0;
        for (double x : c.a_minus) n2 += x * x;
        if (c.passage.creeping_flag) continue;
        CHECK(std::sqrt(n2) <= c.passage.undershoot * (1.0 + 1e-12) + 1e-12);
        CHECK(c.passage.undershoot < t);
    }
}

TEST_CASE("coupled process at fixed operational time: stable marginal of A") {
    // d=1: E e^{i xi A(1)} = e^{-cos(pi a / 2) |xi|^a}
    Rng rng(111, 0);
    const double a = 0.7;
    const double b_const = std::cos(3.14159265358979323846 * a / 2.0);
    MomentAccumulator re_half, re_one;
    for (int i = 0; i < 100000; ++i) {
        const auto c = sample_coupled_at_optime(a, 1, 1.0, 1e-4, true, rng);
        re_half.add(std::cos(0.5 * c.a[0]));
        re_one.add(std::cos(1.0 * c.a[0]));
    }
    CHECK(std::abs(re_half.mean() - std::exp(-b_const * std::pow(0.5, a))) <
          3.0 * re_half.stderr_mean());
    CHECK(std::abs(re_one.mean() - std::exp(-b_const)) <
          3.0 * re_one.stderr_mean());
}

TEST_CASE("coupled passage: no-jump passages vanish as eps shrinks") {
    Rng rng(112, 0);
    const double a = 0.6, t = 1.0;
    auto creep_rate = [&](double eps) {
        int n_creep = 0;
        const int n = 20000;
        for (int i = 0; i < n; ++i)
            if (sample_coupled_passage(a, 1, t, eps, false, rng).passage.creeping_flag)
                ++n_creep;
        return static_cast<double>(n_creep) / n;
    };
    const double coarse = creep_rate(1e-2);
    const double fine = creep_rate(1e-4);
    CHECK(fine <= coarse);
    CHECK(fine < 0.01);
}

TEST_CASE("renewal density values") {
    CHECK(renewal_density(1.0, 7.3) == 1.0);
    CHECK(renewal_density(0.5, 4.0) ==
          doctest::Approx(std::pow(4.0, -0.5) / std::tgamma(0.5)).epsilon(1e-14));
    // 4^{-1/2} / Gamma(1/2) = 1 / (2 sqrt(pi))
    CHECK(renewal_density(0.5, 4.0) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(3.14159265358979323846)))
              .epsilon(1e-14));
    CHECK_THROWS_AS(renewal_density(0.5, 0.0), std::domain_error);
}

TEST_CASE("small-jump moments of the truncated clock") {
    // closed forms against direct quadrature of s nu(ds) and s^2 nu(ds)
    const double a = 0.6, eps = 1e-3;
    const double pref = a / std::tgamma(1.0 - a);
    const double m1 = oracles::integrate_simpson(
        [&](double s) { return pref * std::pow(s, -a); }, 1e-15, eps, 1e-16);
    CHECK(std::abs(small_jump_drift(a, eps) - m1) < 1e-12);
    const double m2 = oracles::integrate_simpson(
        [&](double s) { return pref * std::pow(s, 1.0 - a); }, 1e-15, eps, 1e-18);
    CHECK(std::abs(small_jump_var_rate(a, eps, 2) - 0.5 * m2) < 1e-14);
}
