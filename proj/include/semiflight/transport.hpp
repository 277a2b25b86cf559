#ifndef SEMIFLIGHT_TRANSPORT_HPP
#define SEMIFLIGHT_TRANSPORT_HPP

#include <complex>
#include <functional>
#include <vector>

#include "semiflight/levy.hpp"
#include "semiflight/rng.hpp"

namespace semiflight {

// One realization of the unit-speed scattering flight at time t, split into
// the completed jumps and the segment still in flight:
//   position = x0 + jump_sum + in_flight,  |position - x0| <= t.
// Jumps are accumulated in chronological order, then the in-flight term,
// so the decomposition identity is reproducible bit for bit.
struct FlightSample {
    std::vector<double> position;
    std::vector<double> jump_sum;
    std::vector<double> in_flight;
    long long n_jumps = 0;
    double t = 0.0;
};

// Isotropic flight: directions redrawn uniformly on S^{d-1} at epochs with
// Mittag-Leffler(alpha, theta) waiting times; alpha = 1 is the Markov flight.
FlightSample sample_flight(int d, double alpha, double theta, double t,
                           const std::vector<double>& x0, Rng& rng);

// One-dimensional telegraph flight: strict direction reversal at renewal
// epochs, position x0 + v0 * int_0^t (-1)^{N(tau)} dtau.
FlightSample sample_telegraph_flight(double alpha, double theta, double t,
                                     double x0, int v0, Rng& rng);

// Rescaled flight c^{-1/alpha} X(c^{1/alpha} t) started at the origin.
FlightSample sample_scaled_flight(int d, double alpha, double theta, double t,
                                  double c, Rng& rng);

// One draw of the superdiffusive limit X_inf(t) = M + gamma_sigma * U with
// M the coupled displacement sum just before the level crossing, gamma_sigma
// the remaining age t - sigma(L-), and U the direction of the jump in
// progress.
struct LimitSample {
    std::vector<double> m;
    double gamma_sigma = 0.0;
    std::vector<double> u;
    std::vector<double> x_inf;
    bool creeping_flag = false;
    long long n_jumps = 0;
};

LimitSample sample_limit(int d, double alpha, double t, double eps,
                         bool gaussian_correction, Rng& rng);

struct CharFnEstimate {
    std::vector<double> xi;
    double t = 0.0;
    std::complex<double> estimate{0.0, 0.0};
    double stderr_est = 0.0;
};

// Empirical characteristic function mean e^{i xi . x} with its standard error.
CharFnEstimate empirical_charfn(const std::vector<std::vector<double>>& samples,
                                const std::vector<double>& xi, double t = 0.0);

// Fourier-Laplace symbol psi(xi, l) = int_{S^{d-1}} (l - i xi.v)^a mu(dv);
// closed form in d = 1, reduced to a polar integral for d >= 2.
std::complex<double> psi_symbol(int d, double alpha, double xi_norm,
                                std::complex<double> lambda);

struct MsdPoint {
    double t = 0.0;
    double mean_square = 0.0;
    double stderr_mean = 0.0;
};

// Second moments of |sampler(t)| over n_paths per grid point.
std::vector<MsdPoint> msd_curve(
    const std::function<std::vector<double>(double, Rng&)>& sampler,
    const std::vector<double>& t_grid, long long n_paths, Rng& rng);

// Log-log slope of a moment curve.
double msd_loglog_slope(const std::vector<MsdPoint>& curve);

}  // namespace semiflight

#endif
