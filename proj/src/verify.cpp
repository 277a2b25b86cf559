#include "semiflight/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "semiflight/evolution.hpp"
#include "semiflight/fracops.hpp"
#include "semiflight/levy.hpp"
#include "semiflight/parallel.hpp"
#include "semiflight/rng.hpp"
#include "semiflight/special.hpp"
#include "semiflight/stats.hpp"
#include "semiflight/transport.hpp"

namespace semiflight {

namespace {

constexpr std::uint64_t kLawStreamStride = 1ull << 20;

std::uint64_t law_stream(int law_index, int rank) {
    return static_cast<std::uint64_t>(law_index) * kLawStreamStride +
           static_cast<std::uint64_t>(rank);
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Collects one scalar per sample index, deterministically across workers.
std::vector<double> sample_parallel(
    const ExperimentConfig& cfg, int law_index, long long n,
    const std::function<double(Rng&)>& draw) {
    std::vector<double> out(static_cast<std::size_t>(n));
    parallel_blocks(n, cfg.workers, [&](int rank, long long lo, long long hi) {
        Rng rng(cfg.seed, law_stream(law_index, rank));
        for (long long i = lo; i < hi; ++i)
            out[static_cast<std::size_t>(i)] = draw(rng);
    });
    return out;
}

MomentAccumulator accumulate_parallel(
    const ExperimentConfig& cfg, int law_index, long long n,
    const std::function<double(Rng&)>& draw) {
    std::vector<MomentAccumulator> parts(static_cast<std::size_t>(cfg.workers));
    parallel_blocks(n, cfg.workers, [&](int rank, long long lo, long long hi) {
        Rng rng(cfg.seed, law_stream(law_index, rank));
        auto& acc = parts[static_cast<std::size_t>(rank)];
        for (long long i = lo; i < hi; ++i) acc.add(draw(rng));
    });
    MomentAccumulator total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

// ---------------------------------------------------------------- law 1
LawResult law_ml_waiting(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "ml-waiting-law";
    r.kind = "ks";
    const double a = cfg.alpha, th = cfg.theta;
    auto sample = sample_parallel(cfg, 1, cfg.n_paths, [&](Rng& rng) {
        return sample_ml_waiting_time(a, th, rng);
    });
    r.statistic = ks_distance(std::move(sample), [&](double t) {
        return 1.0 - ml_survival(a, th, t);
    });
    r.tolerance = 0.01;
    r.pass = r.statistic < r.tolerance;
    return r;
}

// ---------------------------------------------------------------- law 2
LawResult law_ml_tail(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "ml-tail-asymptotics";
    r.kind = "moment";
    const double a = cfg.alpha, th = cfg.theta, t = 100.0;
    auto acc = accumulate_parallel(cfg, 2, cfg.n_paths, [&](Rng& rng) {
        return sample_ml_waiting_time(a, th, rng) > t ? 1.0 : 0.0;
    });
    r.empirical = acc.mean() * th * std::pow(t, a);
    r.analytic = 1.0 / std::tgamma(1.0 - a);
    r.statistic = std::abs(r.empirical - r.analytic);
    r.tolerance = 0.10 * r.analytic;
    r.pass = r.statistic < r.tolerance;
    r.notes = "t=100, relative budget 10%";
    return r;
}

// ---------------------------------------------------------------- law 3
LawResult law_no_scatter_mass(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "no-scattering-mass";
    r.kind = "moment";
    const double a = cfg.alpha, th = cfg.theta;
    const int d = cfg.dimension;
    const std::vector<double> x0(static_cast<std::size_t>(d), 0.0);
    double worst = 0.0, worst_tol = 1.0;
    bool pass = true;
    std::ostringstream notes;
    int sub = 0;
    for (double t : {0.5, 1.0, 2.0}) {
        auto acc = accumulate_parallel(cfg, 30 + sub, cfg.n_paths, [&](Rng& rng) {
            return sample_flight(d, a, th, t, x0, rng).n_jumps == 0 ? 1.0 : 0.0;
        });
        ++sub;
        const double p_hat = acc.mean();
        const double target = ml_survival(a, th, t);
        const double tol = 3.0 * binomial_stderr(p_hat, acc.n);
        const double diff = std::abs(p_hat - target);
        if (diff - tol > worst - worst_tol) {
            worst = diff;
            worst_tol = tol;
            r.empirical = p_hat;
            r.analytic = target;
        }
        pass = pass && diff <= tol;
        notes << "t=" << t << ":|d|=" << diff << "<=3SE=" << tol << " ";
    }
    r.statistic = worst;
    r.tolerance = worst_tol;
    r.pass = pass;
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 4
LawResult law_finite_speed(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "finite-speed";
    r.kind = "bound";
    const double a = cfg.alpha, th = cfg.theta;
    const int d = cfg.dimension;
    const std::vector<double> x0(static_cast<std::size_t>(d), 0.0);
    const long long total = 1000000;
    const long long per = total / 4;
    std::vector<long long> violations(static_cast<std::size_t>(cfg.workers), 0);
    const double t_cycle[3] = {0.5, 1.0, 2.0};
    // slack for the fixed-order float summation of the decomposition
    auto ok = [](double dist, double t) { return dist <= t * (1.0 + 1e-9) + 1e-12; };
    parallel_blocks(per, cfg.workers, [&](int rank, long long lo, long long hi) {
        Rng rng(cfg.seed, law_stream(4, rank));
        long long bad = 0;
        for (long long i = lo; i < hi; ++i) {
            const double t = t_cycle[i % 3];
            const auto f = sample_flight(d, a, th, t, x0, rng);
            if (!ok(norm2(f.position), t)) ++bad;
            const auto s = sample_scaled_flight(d, a, th, t, 10.0, rng);
            if (!ok(norm2(s.position), t)) ++bad;
            const auto g = sample_telegraph_flight(a, th, t, 0.0, 1, rng);
            if (!ok(std::abs(g.position[0]), t)) ++bad;
            // exact mode: the pathwise bound is an identity of the construction
            const auto l = sample_limit(d, a, t, cfg.eps * t, false, rng);
            if (!ok(norm2(l.x_inf), t)) ++bad;
        }
        violations[static_cast<std::size_t>(rank)] += bad;
    });
    long long bad = 0;
    for (long long v : violations) bad += v;
    r.empirical = static_cast<double>(bad);
    r.analytic = 0.0;
    r.statistic = static_cast<double>(bad);
    r.tolerance = 0.0;
    r.pass = bad == 0;
    r.notes = "1e6 checks: flight, scaled, telegraph, limit(exact)";
    return r;
}

// ---------------------------------------------------------------- law 5
LawResult law_undershoot(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "undershoot-law";
    r.kind = "ks";
    const double a = cfg.alpha, t = 1.0;
    const double eps = cfg.eps * t;
    const auto spec = BernsteinSpec::stable(a);
    std::vector<double> ratios;
    ratios.reserve(static_cast<std::size_t>(cfg.n_paths));
    long long creeping = 0;
    {
        std::vector<std::vector<double>> parts(static_cast<std::size_t>(cfg.workers));
        std::vector<long long> creeps(static_cast<std::size_t>(cfg.workers), 0);
        parallel_blocks(cfg.n_paths, cfg.workers, [&](int rank, long long lo, long long hi) {
            Rng rng(cfg.seed, law_stream(5, rank));
            auto& part = parts[static_cast<std::size_t>(rank)];
            for (long long i = lo; i < hi; ++i) {
                const auto p = sample_passage(spec, t, eps, rng);
                if (p.creeping_flag)
                    ++creeps[static_cast<std::size_t>(rank)];
                else
                    part.push_back(p.undershoot / t);
            }
        });
        for (int w = 0; w < cfg.workers; ++w) {
            creeping += creeps[static_cast<std::size_t>(w)];
            auto& part = parts[static_cast<std::size_t>(w)];
            ratios.insert(ratios.end(), part.begin(), part.end());
        }
    }
    const double creep_rate =
        static_cast<double>(creeping) / static_cast<double>(cfg.n_paths);
    r.statistic = ks_distance(std::move(ratios), [&](double w) {
        return beta_reg_cdf(a, 1.0 - a, std::clamp(w, 0.0, 1.0));
    });
    r.tolerance = 0.02;
    r.pass = r.statistic < r.tolerance && creep_rate < 0.01;
    std::ostringstream notes;
    notes << "undershoot/t vs Beta(a,1-a); creeping rate " << creep_rate
          << " (budget 1%), flagged samples excluded from the KS set";
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 6
LawResult law_last_displacement(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "last-displacement-law";
    r.kind = "ks";
    const double a = cfg.alpha, th = cfg.theta, t = 1.0, c = 1e4;
    const long long n = std::min<long long>(cfg.n_paths, 5000);
    auto sample = sample_parallel(cfg, 6, n, [&](Rng& rng) {
        const auto s = sample_scaled_flight(1, a, th, t, c, rng);
        return norm2(s.in_flight) / t;
    });
    r.statistic = ks_distance(std::move(sample), [&](double w) {
        return beta_reg_cdf(1.0 - a, a, std::clamp(w, 0.0, 1.0));
    });
    r.tolerance = 0.03;
    r.pass = r.statistic < r.tolerance;
    std::ostringstream notes;
    notes << "c=1e4, d=1, n=" << n << " (KS noise ~" << 1.36 / std::sqrt(double(n))
          << ")";
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 7
LawResult law_superdiffusion(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "superdiffusion-exponent";
    r.kind = "moment";
    const double a = cfg.alpha;
    const int d = cfg.dimension;
    const std::vector<double> grid = {0.5, 1.0, 2.0, 4.0, 8.0};
    std::vector<double> m2(grid.size());
    int sub = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double t = grid[gi];
        auto acc = accumulate_parallel(cfg, 700 + sub, cfg.n_paths, [&](Rng& rng) {
            const auto s = sample_limit(d, a, t, cfg.eps * t, true, rng);
            const double x = norm2(s.x_inf);
            return x * x;
        });
        ++sub;
        m2[gi] = acc.mean();
    }
    const auto fit = fit_loglog(grid, m2);
    const double slope = fit.slope;

    // additive Beta term at t = 1
    auto gacc = accumulate_parallel(cfg, 790, cfg.n_paths, [&](Rng& rng) {
        const auto s = sample_limit(d, a, 1.0, cfg.eps, true, rng);
        return s.gamma_sigma * s.gamma_sigma;
    });
    const double beta_term = gacc.mean();
    const double beta_se = gacc.stderr_mean();
    const double beta_target = (1.0 - a) * (2.0 - a) / 2.0;

    const bool slope_ok = std::abs(slope - 2.0) <= 0.05;
    const bool beta_ok = std::abs(beta_term - beta_target) <= 3.0 * beta_se;
    r.empirical = slope;
    r.analytic = 2.0;
    r.statistic = std::abs(slope - 2.0);
    r.tolerance = 0.05;
    r.pass = slope_ok && beta_ok;
    std::ostringstream notes;
    notes << "slope over t in [0.5,8]; E gamma^2/t^2 = " << beta_term << " +- "
          << beta_se << " vs (1-a)(2-a)/2 = " << beta_target;
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 8
LawResult law_self_similarity(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "m-self-similarity";
    r.kind = "moment";
    const double a = cfg.alpha;
    const int d = cfg.dimension;
    MomentAccumulator acc1, acc2;
    acc1 = accumulate_parallel(cfg, 801, cfg.n_paths, [&](Rng& rng) {
        const auto s = sample_limit(d, a, 1.0, cfg.eps, true, rng);
        const double x = norm2(s.m);
        return x * x;
    });
    acc2 = accumulate_parallel(cfg, 802, cfg.n_paths, [&](Rng& rng) {
        const auto s = sample_limit(d, a, 2.0, 2.0 * cfg.eps, true, rng);
        const double x = norm2(s.m);
        return x * x;
    });
    const double m1 = acc1.mean(), m2 = acc2.mean();
    const double ratio = m2 / m1;
    const double se_ratio =
        ratio * std::sqrt(std::pow(acc1.stderr_mean() / m1, 2) +
                          std::pow(acc2.stderr_mean() / m2, 2));
    r.empirical = ratio;
    r.analytic = 4.0;
    r.statistic = std::abs(ratio - 4.0);
    r.tolerance = 3.0 * se_ratio;
    r.pass = r.statistic <= r.tolerance;
    r.notes = "E|M(2)|^2 / E|M(1)|^2, delta-method SE";
    return r;
}

// ---------------------------------------------------------------- law 9
LawResult law_fourier_laplace(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "fourier-laplace-m";
    r.kind = "moment";
    const double a = 0.7;  // pinned by the law
    const int d = 1;
    double worst = 0.0;
    bool pass = true;
    std::ostringstream notes;
    notes << "pinned d=1, alpha=0.7; ";
    int sub = 0;
    for (double t : {0.5, 1.0, 2.0}) {
        std::vector<std::vector<double>> samples(static_cast<std::size_t>(cfg.n_paths));
        parallel_blocks(cfg.n_paths, cfg.workers, [&](int rank, long long lo, long long hi) {
            Rng rng(cfg.seed, law_stream(900 + sub, rank));
            for (long long i = lo; i < hi; ++i)
                samples[static_cast<std::size_t>(i)] =
                    sample_limit(d, a, t, cfg.eps * t, true, rng).m;
        });
        ++sub;
        for (double xi : {0.5, 1.0}) {
            const auto emp = empirical_charfn(samples, {xi}, t);
            const double target = talbot_invert(
                [&](std::complex<double> l) {
                    return std::pow(l, a - 1.0) / psi_symbol(1, a, xi, l);
                },
                t, TalbotConfig{});
            const double diff = std::abs(emp.estimate - target);
            worst = std::max(worst, diff);
            pass = pass && diff < 0.02;
            notes << "(xi=" << xi << ",t=" << t << "):" << diff << " ";
        }
    }
    r.statistic = worst;
    r.tolerance = 0.02;
    r.pass = pass;
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 10
LawResult law_backward_equation(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "backward-equation-v";
    r.kind = "moment";
    const double a = cfg.alpha, th = cfg.theta;
    double worst = 0.0, worst_tol = 1.0;
    bool pass = true;
    std::ostringstream notes;
    int sub = 0;
    for (double t : {0.5, 1.0, 2.0}) {
        auto acc = accumulate_parallel(cfg, 1000 + sub, cfg.n_paths, [&](Rng& rng) {
            // V(t) = (-1)^{N(t)} started from +1; only the jump parity matters
            long long n = 0;
            double tau = 0.0;
            for (;;) {
                tau += (a == 1.0) ? rng.exponential(th)
                                  : sample_ml_waiting_time(a, th, rng);
                if (tau > t) break;
                ++n;
            }
            return (n % 2 == 0) ? 1.0 : 0.0;
        });
        ++sub;
        const double p_hat = acc.mean();
        const double target =
            0.5 * (1.0 + (a == 1.0 ? std::exp(-2.0 * th * t)
                                   : ml_eval(a, -2.0 * th * std::pow(t, a))));
        const double tol = 3.0 * binomial_stderr(p_hat, acc.n);
        const double diff = std::abs(p_hat - target);
        if (diff - tol > worst - worst_tol) {
            worst = diff;
            worst_tol = tol;
            r.empirical = p_hat;
            r.analytic = target;
        }
        pass = pass && diff <= tol;
        notes << "t=" << t << ":|d|=" << diff << "<=3SE=" << tol << " ";
    }
    r.statistic = worst;
    r.tolerance = worst_tol;
    r.pass = pass;
    r.notes = notes.str();
    return r;
}

// FD solve of q_tt + 2 theta q_t = q_xx, q(x,0) = w(x), q_t(x,0) = 0;
// centered three-level scheme, returns q(0, t_eval).
double fd_telegraph_q0(double theta, double t_eval,
                       const std::function<double(double)>& w) {
    const double box = t_eval + 8.0;
    const double dx = 0.005;
    const int nx = static_cast<int>(2.0 * box / dx) + 1;
    const int nt = static_cast<int>(std::ceil(t_eval / (0.5 * dx)));
    const double dt = t_eval / nt;
    const double c2 = dt * dt / (dx * dx);
    std::vector<double> prev(static_cast<std::size_t>(nx)),
        cur(static_cast<std::size_t>(nx)), next(static_cast<std::size_t>(nx), 0.0);
    for (int i = 0; i < nx; ++i) prev[static_cast<std::size_t>(i)] = w(-box + i * dx);
    // first step from q_t(x, 0) = 0
    for (int i = 1; i + 1 < nx; ++i) {
        const auto k = static_cast<std::size_t>(i);
        cur[k] = prev[k] + 0.5 * c2 * (prev[k + 1] - 2.0 * prev[k] + prev[k - 1]);
    }
    cur[0] = cur[static_cast<std::size_t>(nx - 1)] = 0.0;
    for (int n = 1; n < nt; ++n) {
        for (int i = 1; i + 1 < nx; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double lap = cur[k + 1] - 2.0 * cur[k] + cur[k - 1];
            next[k] = (2.0 * cur[k] - (1.0 - theta * dt) * prev[k] + c2 * lap) /
                      (1.0 + theta * dt);
        }
        next[0] = next[static_cast<std::size_t>(nx - 1)] = 0.0;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur[static_cast<std::size_t>((nx - 1) / 2)];
}

// ---------------------------------------------------------------- law 11
LawResult law_wave_representation(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "damped-wave-representation";
    r.kind = "moment";
    const double th = cfg.theta;
    const auto w_init = [](double x) { return std::exp(-0.5 * x * x); };
    const auto u = [&](const std::vector<double>& x, int) { return w_init(x[0]); };
    const double fd_tol = 2e-3;
    bool pass = true;
    double worst = 0.0, worst_tol = 1.0;
    std::ostringstream notes;
    int sub = 0;
    for (double a : {1.0, 0.6}) {
        const BernsteinSpec spec =
            a == 1.0 ? BernsteinSpec::markov() : BernsteinSpec::stable(a);
        const FiniteSpace tele = FiniteSpace::telegraph(th);
        const GroupAction act = GroupAction::translate(1);
        const long long half = cfg.n_paths / 2;
        for (double t : {0.5, 1.0, 2.0}) {
            // direct product estimator, V_0 symmetrized over both signs
            Rng rng_p(cfg.seed, law_stream(1100 + sub, 0));
            Rng rng_m(cfg.seed, law_stream(1100 + sub, 1));
            const MomentEstimate qp =
                estimate_q(act, tele, spec, 0, t, u, half, {0.0}, rng_p);
            const MomentEstimate qm =
                estimate_q(act, tele, spec, 1, t, u, half, {0.0}, rng_m);
            const double direct = 0.5 * (qp.mean + qm.mean);
            const double direct_se =
                0.5 * std::sqrt(qp.stderr_mean * qp.stderr_mean +
                                qm.stderr_mean * qm.stderr_mean);

            Rng rng_r(cfg.seed, law_stream(1150 + sub, 0));
            const MomentEstimate repr =
                estimate_q_wave_repr(spec, th, t, w_init, cfg.n_paths, rng_r);
            ++sub;

            const double diff = std::abs(direct - repr.mean);
            const double tol = 3.0 * (direct_se + repr.stderr_mean);
            pass = pass && diff <= tol;
            if (diff - tol > worst - worst_tol) {
                worst = diff;
                worst_tol = tol;
                r.empirical = direct;
                r.analytic = repr.mean;
            }
            notes << "a=" << a << ",t=" << t << ":|d|=" << diff << "<=" << tol << " ";
            if (a == 1.0) {
                const double fd = fd_telegraph_q0(th, t, w_init);
                const double fd_diff = std::abs(direct - fd);
                const double fd_budget = 3.0 * direct_se + fd_tol;
                pass = pass && fd_diff <= fd_budget;
                notes << "fd:" << fd_diff << "<=" << fd_budget << " ";
            }
        }
    }
    r.statistic = worst;
    r.tolerance = worst_tol;
    r.pass = pass;
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 12
LawResult law_symbol_identities(const ExperimentConfig& cfg) {
    (void)cfg;
    LawResult r;
    r.law_id = "symbol-identities";
    r.kind = "residual";
    double worst = 0.0;
    for (double a : {0.3, 0.5, 0.8})
        for (double lam : {1.0, 2.0})
            for (double xv : {0.0, 1.0})
                worst = std::max(worst,
                                 verify_symbol(a, 1.0, xv, {lam, 0.0}));
    bool pass = worst < 1e-8;

    // Caputo eigenfunction residual must shrink under grid refinement.
    const double a = 0.6, th = 1.0;
    auto residual = [&](int n) {
        GridFn1D f;
        f.dt = 1.0 / n;
        f.values.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            f.values[static_cast<std::size_t>(i)] = ml_survival(a, th, i * f.dt);
        const GridFn1D d = caputo_frac_deriv(f, a);
        double worst_node = 0.0;
        for (int i = n / 4; i <= n; ++i)
            worst_node = std::max(
                worst_node, std::abs(d.values[static_cast<std::size_t>(i)] +
                                     th * f.values[static_cast<std::size_t>(i)]));
        return worst_node;
    };
    const double res_c = residual(256);
    const double res_f = residual(512);
    const bool refine_ok = res_f < 0.9 * res_c && res_f < 0.01;
    pass = pass && refine_ok;
    r.statistic = worst;
    r.tolerance = 1e-8;
    r.pass = pass;
    std::ostringstream notes;
    notes << "symbol grid worst residual " << worst
          << "; eigenfunction residual " << res_c << " -> " << res_f
          << " under dt halving (need <0.9x and <0.01)";
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 13
LawResult law_markov_reductions(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "markov-reductions";
    r.kind = "ks";
    const double th = cfg.theta;
    auto waits = sample_parallel(cfg, 1300, cfg.n_paths, [&](Rng& rng) {
        return sample_ml_waiting_time(1.0, th, rng);
    });
    const double ks = ks_distance(std::move(waits), [&](double t) {
        return 1.0 - std::exp(-th * t);
    });

    const double t_mean = 5.0;
    auto nacc = accumulate_parallel(cfg, 1301, cfg.n_paths, [&](Rng& rng) {
        long long n = 0;
        double tau = 0.0;
        for (;;) {
            tau += rng.exponential(th);
            if (tau > t_mean) break;
            ++n;
        }
        return static_cast<double>(n);
    });
    const double mean_diff = std::abs(nacc.mean() - th * t_mean);
    const double mean_tol = 3.0 * nacc.stderr_mean();

    // diffusive mean square displacement of the d=2 Markov flight
    const std::vector<double> grid = {10.0, 20.0, 30.0, 50.0};
    const long long n_msd = std::min<long long>(cfg.n_paths, 20000);
    std::vector<double> m2(grid.size());
    const std::vector<double> x0 = {0.0, 0.0};
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        auto acc = accumulate_parallel(cfg, 1310 + static_cast<int>(gi), n_msd,
                                       [&](Rng& rng) {
            const auto f = sample_flight(2, 1.0, th, grid[gi], x0, rng);
            const double x = norm2(f.position);
            return x * x;
        });
        m2[gi] = acc.mean();
    }
    const double slope = fit_loglog(grid, m2).slope;

    const bool pass =
        ks < 0.01 && mean_diff <= mean_tol && std::abs(slope - 1.0) <= 0.1;
    r.statistic = ks;
    r.tolerance = 0.01;
    r.empirical = slope;
    r.analytic = 1.0;
    r.pass = pass;
    std::ostringstream notes;
    notes << "KS(exp waits)=" << ks << "; |EN - th t|=" << mean_diff
          << "<=3SE=" << mean_tol << "; msd slope=" << slope << " (1.0 +- 0.1)";
    r.notes = notes.str();
    return r;
}

// ---------------------------------------------------------------- law 14
LawResult law_renewal_mean(const ExperimentConfig& cfg) {
    LawResult r;
    r.law_id = "renewal-mean";
    r.kind = "moment";
    const double a = cfg.alpha, th = cfg.theta;
    double worst = 0.0, worst_tol = 1.0;
    bool pass = true;
    std::ostringstream notes;
    int sub = 0;
    for (double t : {1.0, 5.0}) {
        auto acc = accumulate_parallel(cfg, 1400 + sub, cfg.n_paths, [&](Rng& rng) {
            long long n = 0;
            double tau = 0.0;
            for (;;) {
                tau += (a == 1.0) ? rng.exponential(th)
                                  : sample_ml_waiting_time(a, th, rng);
                if (tau > t) break;
                ++n;
            }
            return static_cast<double>(n);
        });
        ++sub;
        const double target = th * std::pow(t, a) / std::tgamma(1.0 + a);
        const double diff = std::abs(acc.mean() - target);
        const double tol = 3.0 * acc.stderr_mean();
        pass = pass && diff <= tol;
        if (diff - tol > worst - worst_tol) {
            worst = diff;
            worst_tol = tol;
            r.empirical = acc.mean();
            r.analytic = target;
        }
        notes << "t=" << t << ":|d|=" << diff << "<=3SE=" << tol << " ";
    }
    r.statistic = worst;
    r.tolerance = worst_tol;
    r.pass = pass;
    r.notes = notes.str();
    return r;
}

}  // namespace

std::vector<LawResult> run_all_laws(const ExperimentConfig& cfg) {
    std::vector<LawResult> out;
    out.push_back(law_ml_waiting(cfg));
    out.push_back(law_ml_tail(cfg));
    out.push_back(law_no_scatter_mass(cfg));
    out.push_back(law_finite_speed(cfg));
    out.push_back(law_undershoot(cfg));
    out.push_back(law_last_displacement(cfg));
    out.push_back(law_superdiffusion(cfg));
    out.push_back(law_self_similarity(cfg));
    out.push_back(law_fourier_laplace(cfg));
    out.push_back(law_backward_equation(cfg));
    out.push_back(law_wave_representation(cfg));
    out.push_back(law_symbol_identities(cfg));
    out.push_back(law_markov_reductions(cfg));
    out.push_back(law_renewal_mean(cfg));
    return out;
}

void write_report_jsonl(std::ostream& out, const std::vector<LawResult>& laws,
                        const ExperimentConfig& cfg) {
    for (const auto& law : laws) {
        nlohmann::json j;
        j["law_id"] = law.law_id;
        j["kind"] = law.kind;
        j["analytic_value"] = law.analytic;
        j["empirical_value"] = law.empirical;
        j["statistic"] = law.statistic;
        j["tolerance"] = law.tolerance;
        j["pass"] = law.pass;
        j["notes"] = law.notes;
        j["alpha"] = cfg.alpha;
        j["theta"] = cfg.theta;
        j["dimension"] = cfg.dimension;
        j["n_paths"] = cfg.n_paths;
        j["seed"] = cfg.seed;
        j["workers"] = cfg.workers;
        out << j.dump() << '\n';
    }
}

}  // namespace semiflight
