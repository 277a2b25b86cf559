#ifndef SEMIFLIGHT_CONFIG_HPP
#define SEMIFLIGHT_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace semiflight {

// Experiment configuration: flat key=value file, overridden by --key value
// pairs on the command line.  eps is the truncation threshold relative to
// the evaluation time (absolute threshold = eps * t).
struct ExperimentConfig {
    std::string experiment;
    double alpha = 0.6;
    double theta = 1.0;
    int dimension = 1;
    std::vector<double> t_grid = {1.0};
    long long n_paths = 10000;
    std::uint64_t seed = 12345;
    int workers = 1;
    double eps = 1e-4;
    std::string output_path;

    void validate() const;  // throws std::invalid_argument with a message
};

extern const char* const kExperimentNames[7];

// Parses `key = value` lines; '#' starts a comment.  Unknown keys throw.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Applies file values then command-line overrides onto the defaults.
ExperimentConfig make_config(const std::map<std::string, std::string>& file_kv,
                             const std::vector<std::pair<std::string, std::string>>& overrides);

}  // namespace semiflight

#endif
