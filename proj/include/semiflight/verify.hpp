#ifndef SEMIFLIGHT_VERIFY_HPP
#define SEMIFLIGHT_VERIFY_HPP

#include <ostream>
#include <string>
#include <vector>

#include "semiflight/config.hpp"

namespace semiflight {

// Outcome of one closed-form law checked against simulation.  For KS-style
// laws `statistic` is the KS distance and `analytic` is 0; for moment-style
// laws the discrepancy |empirical - analytic| is compared against
// tolerance = 3 * (combined) standard error unless stated otherwise.
struct LawResult {
    std::string law_id;
    std::string kind;  // "ks" | "moment" | "bound" | "residual"
    double analytic = 0.0;
    double empirical = 0.0;
    double statistic = 0.0;  // ks distance, |diff|, violation count or residual
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;
};

// Runs every acceptance law at the configured alpha/theta/seed/workers.
// Laws that pin their own parameters say so in the notes field.
std::vector<LawResult> run_all_laws(const ExperimentConfig& cfg);

// One JSON object per line.
void write_report_jsonl(std::ostream& out, const std::vector<LawResult>& laws,
                        const ExperimentConfig& cfg);

}  // namespace semiflight

#endif
