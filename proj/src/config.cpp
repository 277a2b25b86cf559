#include "semiflight/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semiflight {

const char* const kExperimentNames[7] = {
    "flight", "limit", "scaled", "telegraph", "wave-repr", "verify-laws",
    "symbol-check"};

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key);
    }
    if (pos != v.size())
        throw std::invalid_argument("config: trailing junk in value for " + key);
    return x;
}

long long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long x;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for " + key);
    }
    if (pos != v.size())
        throw std::invalid_argument("config: trailing junk in value for " + key);
    return x;
}

std::vector<double> parse_grid(const std::string& key, const std::string& v) {
    std::vector<double> grid;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        grid.push_back(parse_double(key, item));
    }
    if (grid.empty()) throw std::invalid_argument("config: empty t_grid");
    return grid;
}

void apply(ExperimentConfig& c, const std::string& key, const std::string& value) {
    if (key == "experiment") c.experiment = value;
    else if (key == "alpha") c.alpha = parse_double(key, value);
    else if (key == "theta") c.theta = parse_double(key, value);
    else if (key == "dimension") c.dimension = static_cast<int>(parse_int(key, value));
    else if (key == "t_grid") c.t_grid = parse_grid(key, value);
    else if (key == "n_paths") c.n_paths = parse_int(key, value);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "workers") c.workers = static_cast<int>(parse_int(key, value));
    else if (key == "eps") c.eps = parse_double(key, value);
    else if (key == "output_path") c.output_path = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

ExperimentConfig make_config(
    const std::map<std::string, std::string>& file_kv,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    ExperimentConfig c;
    if (const char* env = std::getenv("SEMIFLIGHT_WORKERS")) {
        c.workers = static_cast<int>(parse_int("SEMIFLIGHT_WORKERS", env));
    }
    for (const auto& [k, v] : file_kv) apply(c, k, v);
    for (const auto& [k, v] : overrides) apply(c, k, v);
    c.validate();
    return c;
}

void ExperimentConfig::validate() const {
    const bool known = std::any_of(std::begin(kExperimentNames),
                                   std::end(kExperimentNames),
                                   [&](const char* n) { return experiment == n; });
    if (!known)
        throw std::invalid_argument("config: unknown experiment '" + experiment + "'");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("config: alpha must be in (0, 1]");
    if (!(theta > 0.0)) throw std::invalid_argument("config: theta must be > 0");
    if (dimension < 1) throw std::invalid_argument("config: dimension must be >= 1");
    if (n_paths < 1) throw std::invalid_argument("config: n_paths must be >= 1");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    if (!(eps > 0.0) || eps >= 1.0)
        throw std::invalid_argument("config: eps must be in (0, 1)");
    if (t_grid.empty()) throw std::invalid_argument("config: t_grid is empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0))
            throw std::invalid_argument("config: t_grid entries must be > 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("config: t_grid must be strictly increasing");
    }
}

}  // namespace semiflight
