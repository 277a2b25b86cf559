#include "semiflight/levy.hpp"

#include <cmath>
#include <stdexcept>

namespace semiflight {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

BernsteinSpec BernsteinSpec::stable(double a) {
    if (!(a > 0.0) || !(a < 1.0))
        throw std::domain_error("BernsteinSpec::stable: alpha must be in (0, 1)");
    BernsteinSpec s;
    s.kind = Kind::Stable;
    s.alpha = a;
    return s;
}

BernsteinSpec BernsteinSpec::markov() { return BernsteinSpec{}; }

double sample_stable(double alpha, Rng& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("sample_stable: alpha must be in (0, 1)");
    // Kanter (1975): S = (a(U)/E)^{(1-a)/a} with U uniform on (0,1),
    //   a(u) = sin(a pi u)^{a/(1-a)} sin((1-a) pi u) / sin(pi u)^{1/(1-a)}.
    // Evaluated in log space so the exponents stay tame as a -> 1.
    const double u = rng.uniform_pos();
    const double e = rng.exponential(1.0);
    const double log_s = std::log(std::sin(alpha * kPi * u)) +
                         (1.0 - alpha) / alpha *
                             std::log(std::sin((1.0 - alpha) * kPi * u)) -
                         1.0 / alpha * std::log(std::sin(kPi * u)) -
                         (1.0 - alpha) / alpha * std::log(e);
    return std::exp(log_s);
}

double sample_ml_waiting_time(double alpha, double theta, Rng& rng) {
    if (!(theta > 0.0))
        throw std::domain_error("sample_ml_waiting_time: theta must be > 0");
    const double t_exp = rng.exponential(theta);
    if (alpha == 1.0) return t_exp;
    return std::pow(t_exp, 1.0 / alpha) * sample_stable(alpha, rng);
}

double levy_tail(double alpha, double s) {
    return std::pow(s, -alpha) / std::tgamma(1.0 - alpha);
}

double small_jump_drift(double alpha, double eps) {
    return alpha * std::pow(eps, 1.0 - alpha) /
           ((1.0 - alpha) * std::tgamma(1.0 - alpha));
}

double small_jump_var_rate(double alpha, double eps, int d) {
    return alpha * std::pow(eps, 2.0 - alpha) /
           (static_cast<double>(d) * (2.0 - alpha) * std::tgamma(1.0 - alpha));
}

double renewal_density(double alpha, double w) {
    if (!(w > 0.0)) throw std::domain_error("renewal_density: w must be > 0");
    if (alpha == 1.0) return 1.0;
    return std::pow(w, alpha - 1.0) / std::tgamma(alpha);
}

namespace {

struct WalkState {
    double sigma = 0.0;   // current value of the subordinator surrogate
    double op = 0.0;      // operational time
};

}  // namespace

PassageSample sample_passage(const BernsteinSpec& spec, double t, double eps,
                             Rng& rng) {
    if (spec.is_markov()) {
        // L(t) = t identically: the clock is the identity.
        PassageSample p;
        p.level = t;
        p.passage_time = t;
        p.undershoot = t;
        p.overshoot = t;
        return p;
    }
    const double alpha = spec.alpha;
    if (!(eps > 0.0) || !(eps < t))
        throw std::invalid_argument("sample_passage: need 0 < eps < t");
    const double rate = levy_tail(alpha, eps);
    const double drift = small_jump_drift(alpha, eps);
    PassageSample p;
    p.level = t;
    WalkState w;
    for (;;) {
        const double gap = rng.exponential(rate);
        if (w.sigma + drift * gap > t) {
            // the drift surrogate crossed first: flagged truncation artifact
            p.passage_time = w.op + (t - w.sigma) / drift;
            p.undershoot = t;
            p.overshoot = t;
            p.creeping_flag = true;
            return p;
        }
        w.op += gap;
        const double before = w.sigma + drift * gap;
        const double jump = eps * std::pow(rng.uniform_pos(), -1.0 / alpha);
        const double after = before + jump;
        if (after > t) {
            p.passage_time = w.op;
            p.undershoot = before;
            p.overshoot = after;
            return p;
        }
        w.sigma = after;
    }
}

CoupledPassageSample sample_coupled_passage(double alpha, int d, double t,
                                            double eps, bool gaussian_correction,
                                            Rng& rng) {
    if (d < 1) throw std::invalid_argument("sample_coupled_passage: d >= 1");
    if (!(eps > 0.0) || !(eps < t))
        throw std::invalid_argument("sample_coupled_passage: need 0 < eps < t");
    const double rate = levy_tail(alpha, eps);
    const double drift = small_jump_drift(alpha, eps);
    const double var_rate =
        gaussian_correction ? small_jump_var_rate(alpha, eps, d) : 0.0;

    CoupledPassageSample out;
    out.passage.level = t;
    out.a_minus.assign(static_cast<std::size_t>(d), 0.0);
    out.passage_direction.assign(static_cast<std::size_t>(d), 0.0);
    std::vector<double> dir(static_cast<std::size_t>(d));
    WalkState w;
    for (;;) {
        const double gap = rng.exponential(rate);
        const bool creep = (w.sigma + drift * gap > t);
        const double dt_op = creep ? (t - w.sigma) / drift : gap;
        if (gaussian_correction && dt_op > 0.0) {
            const double sd = std::sqrt(var_rate * dt_op);
            for (int i = 0; i < d; ++i) out.a_minus[i] += sd * rng.normal();
        }
        if (creep) {
            out.passage.passage_time = w.op + dt_op;
            out.passage.undershoot = t;
            out.passage.overshoot = t;
            out.passage.creeping_flag = true;
            rng.uniform_direction(d, out.passage_direction.data());
            return out;
        }
        w.op += gap;
        const double before = w.sigma + drift * gap;
        const double jump = eps * std::pow(rng.uniform_pos(), -1.0 / alpha);
        rng.uniform_direction(d, dir.data());
        const double after = before + jump;
        if (after > t) {
            out.passage.passage_time = w.op;
            out.passage.undershoot = before;
            out.passage.overshoot = after;
            out.passage_direction = dir;
            return out;
        }
        for (int i = 0; i < d; ++i) out.a_minus[i] += jump * dir[i];
        ++out.n_jumps;
        w.sigma = after;
    }
}

CoupledPoint sample_coupled_at_optime(double alpha, int d, double op_time,
                                      double eps, bool gaussian_correction,
                                      Rng& rng) {
    if (d < 1) throw std::invalid_argument("sample_coupled_at_optime: d >= 1");
    if (!(eps > 0.0))
        throw std::invalid_argument("sample_coupled_at_optime: eps > 0");
    const double rate = levy_tail(alpha, eps);
    const double drift = small_jump_drift(alpha, eps);

    CoupledPoint out;
    out.a.assign(static_cast<std::size_t>(d), 0.0);
    std::vector<double> dir(static_cast<std::size_t>(d));
    double op = 0.0;
    for (;;) {
        const double gap = rng.exponential(rate);
        const double dt_op = std::min(gap, op_time - op);
        if (gaussian_correction && dt_op > 0.0) {
            const double sd =
                std::sqrt(small_jump_var_rate(alpha, eps, d) * dt_op);
            for (int i = 0; i < d; ++i) out.a[i] += sd * rng.normal();
        }
        out.sigma += drift * dt_op;
        if (op + gap >= op_time) return out;
        op += gap;
        const double jump = eps * std::pow(rng.uniform_pos(), -1.0 / alpha);
        rng.uniform_direction(d, dir.data());
        for (int i = 0; i < d; ++i) out.a[i] += jump * dir[i];
        out.sigma += jump;
        ++out.n_jumps;
    }
}

}  // namespace semiflight
