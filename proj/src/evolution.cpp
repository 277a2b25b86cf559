#include "semiflight/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "semiflight/stats.hpp"

namespace semiflight {

GroupAction GroupAction::translate(int d) {
    if (d < 1) throw std::invalid_argument("GroupAction::translate: d >= 1");
    GroupAction a;
    a.kind = Kind::Translate;
    a.dim = d;
    return a;
}

GroupAction GroupAction::rotate2d() {
    GroupAction a;
    a.kind = Kind::Rotate2D;
    a.dim = 2;
    return a;
}

void GroupAction::apply(const std::vector<double>& v, double s,
                        std::vector<double>& x) const {
    if (kind == Kind::Translate) {
        if (v.size() != x.size())
            throw std::invalid_argument("GroupAction: velocity/point dimension mismatch");
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += v[i] * s;
        return;
    }
    // Rotate2D: orientation from the sign of the scalar state value
    if (x.size() != 2) throw std::invalid_argument("GroupAction: rotation needs R^2");
    const double o = v.at(0) >= 0.0 ? 1.0 : -1.0;
    const double c = std::cos(s), sn = std::sin(s);
    const double x1 = x[0] * c + o * x[1] * sn;
    const double x2 = -o * x[0] * sn + x[1] * c;
    x[0] = x1;
    x[1] = x2;
}

EvaluatedEvolution evolve_point(const GroupAction& action, const FiniteSpace& space,
                                const FinitePath& path, double t,
                                const std::vector<double>& x0) {
    if (t < 0.0 || t > path.horizon)
        throw std::out_of_range("evolve_point: t outside the path horizon");
    EvaluatedEvolution ev;
    ev.point = x0;
    const std::size_t n_jumps = static_cast<std::size_t>(path.jump_count(t));
    double seg_start = 0.0;
    for (std::size_t n = 0; n < n_jumps; ++n) {
        action.apply(space.values[static_cast<std::size_t>(path.states[n])],
                     path.epochs[n] - seg_start, ev.point);
        seg_start = path.epochs[n];
    }
    if (t > seg_start)
        action.apply(space.values[static_cast<std::size_t>(path.states[n_jumps])],
                     t - seg_start, ev.point);
    ev.state_index = path.states[n_jumps];
    return ev;
}

MomentEstimate estimate_q(
    const GroupAction& action, const FiniteSpace& space, const BernsteinSpec& spec,
    int v0, double t,
    const std::function<double(const std::vector<double>&, int)>& u,
    long long n_paths, const std::vector<double>& x0, Rng& rng) {
    if (n_paths < 1) throw std::invalid_argument("estimate_q: n_paths >= 1");
    MomentAccumulator acc;
    for (long long i = 0; i < n_paths; ++i) {
        const FinitePath path = simulate_path(space, spec, v0, t, rng);
        const EvaluatedEvolution ev = evolve_point(action, space, path, t, x0);
        acc.add(u(ev.point, ev.state_index));
    }
    MomentEstimate est;
    est.mean = acc.mean();
    est.stderr_mean = acc.stderr_mean();
    est.n = acc.n;
    return est;
}

MomentEstimate estimate_q_wave_repr(const BernsteinSpec& spec, double theta,
                                    double t,
                                    const std::function<double(double)>& w_init,
                                    long long n_paths, Rng& rng, double x0) {
    if (n_paths < 1) throw std::invalid_argument("estimate_q_wave_repr: n_paths >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("estimate_q_wave_repr: theta > 0");
    MomentAccumulator acc;
    for (long long i = 0; i < n_paths; ++i) {
        if (t == 0.0) {
            acc.add(w_init(x0));
            continue;
        }
        // gamma_t = int_0^t (-1)^{N(tau)} dtau from the renewal epochs alone
        double gamma = 0.0;
        double seg_start = 0.0;
        double sign = 1.0;
        for (;;) {
            const double j = spec.is_markov()
                                 ? rng.exponential(theta)
                                 : sample_ml_waiting_time(spec.alpha, theta, rng);
            const double seg_end = std::min(seg_start + j, t);
            gamma += sign * (seg_end - seg_start);
            if (seg_start + j >= t) break;
            seg_start += j;
            sign = -sign;
        }
        acc.add(0.5 * (w_init(x0 + gamma) + w_init(x0 - gamma)));
    }
    MomentEstimate est;
    est.mean = acc.mean();
    est.stderr_mean = acc.stderr_mean();
    est.n = acc.n;
    return est;
}

}  // namespace semiflight
