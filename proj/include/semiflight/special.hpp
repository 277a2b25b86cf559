#ifndef SEMIFLIGHT_SPECIAL_HPP
#define SEMIFLIGHT_SPECIAL_HPP

#include <complex>
#include <functional>

namespace semiflight {

// Mittag-Leffler function E_a(x) = sum_k x^k / Gamma(1 + a k) on the
// completely monotone branch: a in (0, 1], x <= 0.  Absolute error <= 1e-10.
double ml_eval(double alpha, double x);

// Survival function E_a(-theta t^a) of the heavy-tailed waiting time;
// reduces to exp(-theta t) at alpha = 1.
double ml_survival(double alpha, double theta, double t);

// Regularized incomplete beta I_x(a, b).
double beta_reg_cdf(double a, double b, double x);

// 1 / Gamma(z) for real z, zero at the poles z = 0, -1, -2, ...
double rgamma(double z);

// sin(pi z) evaluated with argument reduction.
double sinpi(double z);

struct TalbotConfig {
    int node_count = 32;  // >= 8
    double time = 0.0;    // optional default evaluation time
};

// Fixed-Talbot numerical inversion of a Laplace transform at time t > 0.
// Abate & Valko (2004).  Accuracy is certified by agreement between the
// node_count and 2*node_count rules; disagreement beyond tolerance throws
// std::runtime_error.
double talbot_invert(const std::function<std::complex<double>(std::complex<double>)>& F,
                     double t, const TalbotConfig& cfg = TalbotConfig{});
double talbot_invert(const std::function<std::complex<double>(std::complex<double>)>& F,
                     const TalbotConfig& cfg);

}  // namespace semiflight

#endif
