#include "semiflight/transport.hpp"

#include <cmath>
#include <stdexcept>

#include "semiflight/quadrature.hpp"
#include "semiflight/stats.hpp"

namespace semiflight {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

FlightSample sample_flight(int d, double alpha, double theta, double t,
                           const std::vector<double>& x0, Rng& rng) {
    if (d < 1) throw std::invalid_argument("sample_flight: d >= 1");
    if (t < 0.0) throw std::invalid_argument("sample_flight: t >= 0");
    if (x0.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("sample_flight: x0 dimension mismatch");
    FlightSample s;
    s.t = t;
    s.jump_sum.assign(static_cast<std::size_t>(d), 0.0);
    s.in_flight.assign(static_cast<std::size_t>(d), 0.0);
    std::vector<double> v(static_cast<std::size_t>(d));
    rng.uniform_direction(d, v.data());
    double tau = 0.0;
    if (t > 0.0) {
        for (;;) {
            const double j = alpha == 1.0 ? rng.exponential(theta)
                                          : sample_ml_waiting_time(alpha, theta, rng);
            if (tau + j > t) {
                for (int i = 0; i < d; ++i)
                    s.in_flight[static_cast<std::size_t>(i)] =
                        (t - tau) * v[static_cast<std::size_t>(i)];
                break;
            }
            for (int i = 0; i < d; ++i)
                s.jump_sum[static_cast<std::size_t>(i)] += j * v[static_cast<std::size_t>(i)];
            tau += j;
            ++s.n_jumps;
            rng.uniform_direction(d, v.data());
        }
    }
    s.position = x0;
    for (int i = 0; i < d; ++i)
        s.position[static_cast<std::size_t>(i)] +=
            s.jump_sum[static_cast<std::size_t>(i)] + s.in_flight[static_cast<std::size_t>(i)];
    return s;
}

FlightSample sample_telegraph_flight(double alpha, double theta, double t,
                                     double x0, int v0, Rng& rng) {
    if (v0 != 1 && v0 != -1)
        throw std::invalid_argument("sample_telegraph_flight: v0 must be +-1");
    if (t < 0.0) throw std::invalid_argument("sample_telegraph_flight: t >= 0");
    FlightSample s;
    s.t = t;
    s.jump_sum.assign(1, 0.0);
    s.in_flight.assign(1, 0.0);
    double v = static_cast<double>(v0);
    double tau = 0.0;
    if (t > 0.0) {
        for (;;) {
            const double j = alpha == 1.0 ? rng.exponential(theta)
                                          : sample_ml_waiting_time(alpha, theta, rng);
            if (tau + j > t) {
                s.in_flight[0] = (t - tau) * v;
                break;
            }
            s.jump_sum[0] += j * v;
            tau += j;
            ++s.n_jumps;
            v = -v;
        }
    }
    s.position.assign(1, x0 + s.jump_sum[0] + s.in_flight[0]);
    return s;
}

FlightSample sample_scaled_flight(int d, double alpha, double theta, double t,
                                  double c, Rng& rng) {
    if (!(c >= 1.0)) throw std::invalid_argument("sample_scaled_flight: c >= 1");
    const double scale = std::pow(c, -1.0 / alpha);
    std::vector<double> origin(static_cast<std::size_t>(d), 0.0);
    FlightSample base = sample_flight(d, alpha, theta, t / scale, origin, rng);
    FlightSample s;
    s.t = t;
    s.n_jumps = base.n_jumps;
    s.jump_sum.resize(static_cast<std::size_t>(d));
    s.in_flight.resize(static_cast<std::size_t>(d));
    s.position.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        s.jump_sum[k] = scale * base.jump_sum[k];
        s.in_flight[k] = scale * base.in_flight[k];
        s.position[k] = s.jump_sum[k] + s.in_flight[k];
    }
    return s;
}

LimitSample sample_limit(int d, double alpha, double t, double eps,
                         bool gaussian_correction, Rng& rng) {
    CoupledPassageSample cp =
        sample_coupled_passage(alpha, d, t, eps, gaussian_correction, rng);
    LimitSample s;
    s.m = cp.a_minus;
    s.gamma_sigma = t - cp.passage.undershoot;
    s.u = cp.passage_direction;
    s.creeping_flag = cp.passage.creeping_flag;
    s.n_jumps = cp.n_jumps;
    s.x_inf.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        s.x_inf[k] = s.m[k] + s.gamma_sigma * s.u[k];
    }
    return s;
}

CharFnEstimate empirical_charfn(const std::vector<std::vector<double>>& samples,
                                const std::vector<double>& xi, double t) {
    if (samples.empty())
        throw std::invalid_argument("empirical_charfn: empty sample set");
    MomentAccumulator re, im;
    for (const auto& x : samples) {
        if (x.size() != xi.size())
            throw std::invalid_argument("empirical_charfn: dimension mismatch");
        double phase = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) phase += xi[i] * x[i];
        re.add(std::cos(phase));
        im.add(std::sin(phase));
    }
    CharFnEstimate est;
    est.xi = xi;
    est.t = t;
    est.estimate = {re.mean(), im.mean()};
    est.stderr_est = std::sqrt(re.stderr_mean() * re.stderr_mean() +
                               im.stderr_mean() * im.stderr_mean());
    return est;
}

std::complex<double> psi_symbol(int d, double alpha, double xi_norm,
                                std::complex<double> lambda) {
    if (d < 1) throw std::invalid_argument("psi_symbol: d >= 1");
    if (!(lambda.real() > 0.0))
        throw std::invalid_argument("psi_symbol: Re(lambda) > 0 required");
    const std::complex<double> i(0.0, 1.0);
    if (xi_norm == 0.0) return std::pow(lambda, alpha);
    if (d == 1)
        return 0.5 * (std::pow(lambda - i * xi_norm, alpha) +
                      std::pow(lambda + i * xi_norm, alpha));
    // polar reduction: psi = c_d int_0^pi (l - i |xi| cos(phi))^a sin^{d-2}(phi) dphi
    const double cd = std::tgamma(d / 2.0) /
                      (std::sqrt(3.14159265358979323846) * std::tgamma((d - 1) / 2.0));
    std::function<std::complex<double>(double)> f = [&](double phi) {
        const double sp = std::sin(phi);
        return std::pow(lambda - i * (xi_norm * std::cos(phi)), alpha) *
               std::pow(sp, static_cast<double>(d - 2));
    };
    auto q = integrate<std::complex<double>>(f, 0.0, 3.14159265358979323846, 1e-12, 12);
    if (!q.converged)
        throw std::runtime_error("psi_symbol: sphere quadrature did not converge");
    return cd * q.value;
}

std::vector<MsdPoint> msd_curve(
    const std::function<std::vector<double>(double, Rng&)>& sampler,
    const std::vector<double>& t_grid, long long n_paths, Rng& rng) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("msd_curve: t_grid must increase");
    std::vector<MsdPoint> curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
        MomentAccumulator acc;
        for (long long k = 0; k < n_paths; ++k) {
            const std::vector<double> x = sampler(t, rng);
            const double r = norm2(x);
            acc.add(r * r);
        }
        curve.push_back({t, acc.mean(), acc.stderr_mean()});
    }
    return curve;
}

double msd_loglog_slope(const std::vector<MsdPoint>& curve) {
    std::vector<double> t, m;
    for (const auto& p : curve) {
        t.push_back(p.t);
        m.push_back(p.mean_square);
    }
    return fit_loglog(t, m).slope;
}

}  // namespace semiflight
