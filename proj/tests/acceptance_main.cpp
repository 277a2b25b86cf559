// Acceptance suite: runs every verification law at the reference
// configuration and prints one PASS/FAIL line per criterion.  Exit status
// is the number of failed laws.

#include <cstdio>
#include <thread>

#include "semiflight/verify.hpp"

int main() {
    semiflight::ExperimentConfig cfg;
    cfg.experiment = "verify-laws";
    cfg.alpha = 0.6;
    cfg.theta = 1.0;
    cfg.dimension = 2;
    cfg.n_paths = 100000;
    cfg.seed = 20240915;
    cfg.workers = static_cast<int>(
        std::max(2u, std::min(4u, std::thread::hardware_concurrency())));
    cfg.eps = 1e-4;
    cfg.validate();

    const auto laws = semiflight::run_all_laws(cfg);
    int failed = 0;
    for (const auto& law : laws) {
        if (!law.pass) ++failed;
        std::printf("%-4s %-28s empirical=%-12.6g analytic=%-12.6g stat=%-11.5g tol=%-11.5g %s\n",
                    law.pass ? "PASS" : "FAIL", law.law_id.c_str(), law.empirical,
                    law.analytic, law.statistic, law.tolerance, law.notes.c_str());
    }
    std::printf("%zu laws, %d failed\n", laws.size(), failed);
    return failed;
}
