#ifndef SEMIFLIGHT_LEVY_HPP
#define SEMIFLIGHT_LEVY_HPP

#include <vector>

#include "semiflight/rng.hpp"

namespace semiflight {

// Laplace exponent of the time change: f(l) = l^a (stable, a in (0,1))
// or the identity f(l) = l, under which no time change happens at all.
struct BernsteinSpec {
    enum class Kind { Stable, Markov };
    Kind kind = Kind::Markov;
    double alpha = 1.0;

    static BernsteinSpec stable(double a);
    static BernsteinSpec markov();
    bool is_markov() const { return kind == Kind::Markov; }
};

// One draw of the standard one-sided a-stable law, E e^{-l S} = e^{-l^a}.
// Kanter's exact transformation.
double sample_stable(double alpha, Rng& rng);

// Waiting time J with P(J > t) = E_a(-theta t^a), sampled exactly as
// J = T^{1/a} S with T ~ Exp(theta); alpha = 1 degenerates to Exp(theta).
double sample_ml_waiting_time(double alpha, double theta, Rng& rng);

// Levy measure tail nu(s, inf) = s^{-a} / Gamma(1-a) of the stable clock.
double levy_tail(double alpha, double s);

// Mean of the small jumps below eps per unit operational time,
// int_0^eps s nu(ds) = a eps^{1-a} / ((1-a) Gamma(1-a)).
double small_jump_drift(double alpha, double eps);

// Per-coordinate variance rate of the isotropic small-jump displacement sum,
// (1/d) int_0^eps s^2 nu(ds) = a eps^{2-a} / (d (2-a) Gamma(1-a)).
double small_jump_var_rate(double alpha, double eps, int d);

// Renewal density u^f(w) = w^{a-1} / Gamma(a); constant 1 in the Markov case.
double renewal_density(double alpha, double w);

// First-passage data of the (truncated compound-Poisson surrogate of the)
// stable subordinator over level t.  undershoot = sigma(L-) and
// overshoot = sigma(L); creeping_flag marks passages where the truncation
// drift, not a jump, crossed the level -- a pure discretization artifact.
struct PassageSample {
    double level = 0.0;
    double passage_time = 0.0;  // L, in operational time
    double undershoot = 0.0;
    double overshoot = 0.0;
    bool creeping_flag = false;
};

PassageSample sample_passage(const BernsteinSpec& spec, double t, double eps,
                             Rng& rng);

// Passage data of the coupled pair (A(t), sigma(t)) built from the Poisson
// point process of jump displacements: each retained sigma-jump of size s
// moves A by s*v, v uniform on the sphere.  a_minus is A(L-);
// passage_direction is the direction of the jump in progress at the level
// crossing.  With gaussian_correction the sub-eps displacement sum is
// approximated by a Brownian term matching its variance rate (the exact
// pathwise bound |A(L-)| <= undershoot then holds only up to that noise).
struct CoupledPassageSample {
    PassageSample passage;
    std::vector<double> a_minus;
    std::vector<double> passage_direction;
    long long n_jumps = 0;
};

CoupledPassageSample sample_coupled_passage(double alpha, int d, double t,
                                            double eps, bool gaussian_correction,
                                            Rng& rng);

// Value of the coupled pair at a fixed operational time (no level crossing).
struct CoupledPoint {
    std::vector<double> a;
    double sigma = 0.0;
    long long n_jumps = 0;
};

CoupledPoint sample_coupled_at_optime(double alpha, int d, double op_time,
                                      double eps, bool gaussian_correction,
                                      Rng& rng);

}  // namespace semiflight

#endif
