// semiflight: experiment runner for the scattering-transport samplers.
//
//   semiflight <experiment> [--config PATH] [--key value ...]
//
// Experiments: flight | limit | scaled | telegraph | wave-repr |
//              verify-laws | symbol-check.
// Config keys mirror the command-line flags; see README.md.
// Exit codes: 0 ok, 1 failed law, 2 config error, 3 numerical
// non-convergence.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiflight/config.hpp"
#include "semiflight/csvio.hpp"
#include "semiflight/evolution.hpp"
#include "semiflight/fracops.hpp"
#include "semiflight/parallel.hpp"
#include "semiflight/rng.hpp"
#include "semiflight/special.hpp"
#include "semiflight/transport.hpp"
#include "semiflight/verify.hpp"

namespace {

using namespace semiflight;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

struct SampleRow {
    double t = 0.0;
    std::vector<double> x;
    long long n_jumps = 0;
    double gamma = 0.0;
};

// Runs one row-producing experiment across workers; rows land at their
// global sample index so output depends only on (config, seed, workers).
int run_sampling(const ExperimentConfig& cfg) {
    const long long per_t = cfg.n_paths;
    const long long total = per_t * static_cast<long long>(cfg.t_grid.size());
    std::vector<SampleRow> rows(static_cast<std::size_t>(total));
    for (std::size_t ti = 0; ti < cfg.t_grid.size(); ++ti) {
        const double t = cfg.t_grid[ti];
        parallel_blocks(per_t, cfg.workers, [&](int rank, long long lo, long long hi) {
            Rng rng(cfg.seed,
                    (static_cast<std::uint64_t>(ti) << 32) + static_cast<std::uint64_t>(rank));
            for (long long i = lo; i < hi; ++i) {
                SampleRow row;
                row.t = t;
                if (cfg.experiment == "flight") {
                    const std::vector<double> x0(static_cast<std::size_t>(cfg.dimension), 0.0);
                    const auto s =
                        sample_flight(cfg.dimension, cfg.alpha, cfg.theta, t, x0, rng);
                    row.x = s.position;
                    row.n_jumps = s.n_jumps;
                    row.gamma = norm2(s.in_flight);
                } else if (cfg.experiment == "scaled") {
                    const auto s = sample_scaled_flight(cfg.dimension, cfg.alpha,
                                                        cfg.theta, t, 1e4, rng);
                    row.x = s.position;
                    row.n_jumps = s.n_jumps;
                    row.gamma = norm2(s.in_flight);
                } else if (cfg.experiment == "limit") {
                    // theta != 1 rescales time: t_eff = theta^{1/alpha} t
                    const double t_eff = std::pow(cfg.theta, 1.0 / cfg.alpha) * t;
                    const auto s = sample_limit(cfg.dimension, cfg.alpha, t_eff,
                                                cfg.eps * t_eff, true, rng);
                    row.x = s.x_inf;
                    row.n_jumps = s.n_jumps;
                    row.gamma = s.gamma_sigma;
                } else {  // telegraph
                    const auto s = sample_telegraph_flight(
                        cfg.alpha, cfg.theta, t, 0.0, (i % 2 == 0) ? 1 : -1, rng);
                    row.x = s.position;
                    row.n_jumps = s.n_jumps;
                    row.gamma = norm2(s.in_flight);
                }
                rows[ti * static_cast<std::size_t>(per_t) + static_cast<std::size_t>(i)] =
                    std::move(row);
            }
        });
    }
    const std::string path =
        cfg.output_path.empty() ? cfg.experiment + ".csv" : cfg.output_path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "semiflight: cannot write " << path << "\n";
        return 2;
    }
    const int dim = cfg.experiment == "telegraph" ? 1 : cfg.dimension;
    SampleCsvWriter writer(out, dim);
    for (long long i = 0; i < total; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        writer.write_row(i, row.t, row.x, row.n_jumps, row.gamma);
    }
    std::cout << "wrote " << total << " rows to " << path << "\n";
    return 0;
}

int run_wave_repr(const ExperimentConfig& cfg) {
    const auto w_init = [](double x) { return std::exp(-0.5 * x * x); };
    const auto u = [&](const std::vector<double>& x, int) { return w_init(x[0]); };
    const std::string path =
        cfg.output_path.empty() ? "wave_repr.jsonl" : cfg.output_path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "semiflight: cannot write " << path << "\n";
        return 2;
    }
    const BernsteinSpec spec = cfg.alpha == 1.0 ? BernsteinSpec::markov()
                                                : BernsteinSpec::stable(cfg.alpha);
    const FiniteSpace tele = FiniteSpace::telegraph(cfg.theta);
    const GroupAction act = GroupAction::translate(1);
    bool all_ok = true;
    for (std::size_t ti = 0; ti < cfg.t_grid.size(); ++ti) {
        const double t = cfg.t_grid[ti];
        Rng rng_p(cfg.seed, 4 * ti);
        Rng rng_m(cfg.seed, 4 * ti + 1);
        Rng rng_r(cfg.seed, 4 * ti + 2);
        const auto qp = estimate_q(act, tele, spec, 0, t, u, cfg.n_paths / 2, {0.0}, rng_p);
        const auto qm = estimate_q(act, tele, spec, 1, t, u, cfg.n_paths / 2, {0.0}, rng_m);
        const double direct = 0.5 * (qp.mean + qm.mean);
        const double direct_se = 0.5 * std::hypot(qp.stderr_mean, qm.stderr_mean);
        const auto repr = estimate_q_wave_repr(spec, cfg.theta, t, w_init,
                                               cfg.n_paths, rng_r);
        const double diff = std::abs(direct - repr.mean);
        const double tol = 3.0 * (direct_se + repr.stderr_mean);
        const bool ok = diff <= tol;
        all_ok = all_ok && ok;
        nlohmann::json j;
        j["t"] = t;
        j["alpha"] = cfg.alpha;
        j["theta"] = cfg.theta;
        j["q_direct"] = direct;
        j["q_direct_stderr"] = direct_se;
        j["q_repr"] = repr.mean;
        j["q_repr_stderr"] = repr.stderr_mean;
        j["diff"] = diff;
        j["tolerance"] = tol;
        j["pass"] = ok;
        out << j.dump() << '\n';
        std::cout << (ok ? "PASS" : "FAIL") << " wave-repr t=" << t
                  << " diff=" << diff << " tol=" << tol << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_symbol_check(const ExperimentConfig& cfg) {
    const std::string path =
        cfg.output_path.empty() ? "symbol_check.jsonl" : cfg.output_path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "semiflight: cannot write " << path << "\n";
        return 2;
    }
    bool all_ok = true;
    for (double a : {0.3, 0.5, cfg.alpha, 0.8})
        for (double lam : {1.0, 2.0})
            for (double xv : {0.0, 0.5, 1.0}) {
                const double res = verify_symbol(a, 1.0, xv, {lam, 0.0});
                const bool ok = res < 1e-8;
                all_ok = all_ok && ok;
                nlohmann::json j;
                j["alpha"] = a;
                j["lambda"] = lam;
                j["xi_v"] = xv;
                j["residual"] = res;
                j["tolerance"] = 1e-8;
                j["pass"] = ok;
                out << j.dump() << '\n';
                std::cout << (ok ? "PASS" : "FAIL") << " symbol a=" << a
                          << " lambda=" << lam << " xi.v=" << xv << " residual=" << res
                          << "\n";
            }
    return all_ok ? 0 : 1;
}

int run_verify_laws(const ExperimentConfig& cfg) {
    const auto laws = run_all_laws(cfg);
    const std::string path =
        cfg.output_path.empty() ? "verification_report.jsonl" : cfg.output_path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "semiflight: cannot write " << path << "\n";
        return 2;
    }
    write_report_jsonl(out, laws, cfg);
    bool all_ok = true;
    for (const auto& law : laws) {
        all_ok = all_ok && law.pass;
        std::printf("%-4s %-28s stat=%-12.6g tol=%-12.6g %s\n",
                    law.pass ? "PASS" : "FAIL", law.law_id.c_str(), law.statistic,
                    law.tolerance, law.notes.c_str());
    }
    std::cout << "report: " << path << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << "usage: semiflight <experiment> [--config PATH] [--key value ...]\n"
                     "experiments:";
        for (const char* n : kExperimentNames) std::cout << ' ' << n;
        std::cout << "\n";
        return args.empty() ? 2 : 0;
    }
    ExperimentConfig cfg;
    try {
        std::map<std::string, std::string> file_kv;
        std::vector<std::pair<std::string, std::string>> overrides;
        overrides.emplace_back("experiment", args[0]);
        for (std::size_t i = 1; i < args.size(); i += 2) {
            if (args[i].rfind("--", 0) != 0 || i + 1 >= args.size()) {
                std::cerr << "semiflight: expected --key value pairs\n";
                return 2;
            }
            const std::string key = args[i].substr(2);
            if (key == "config")
                file_kv = parse_config_file(args[i + 1]);
            else
                overrides.emplace_back(key, args[i + 1]);
        }
        cfg = make_config(file_kv, overrides);
    } catch (const std::exception& e) {
        std::cerr << "semiflight: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.experiment == "verify-laws") return run_verify_laws(cfg);
        if (cfg.experiment == "wave-repr") return run_wave_repr(cfg);
        if (cfg.experiment == "symbol-check") return run_symbol_check(cfg);
        return run_sampling(cfg);
    } catch (const std::runtime_error& e) {
        // quadrature / inversion non-convergence
        std::cerr << "semiflight: numerical non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "semiflight: " << e.what() << "\n";
        return 2;
    }
}
