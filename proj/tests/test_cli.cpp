#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "semiflight/config.hpp"
#include "semiflight/csvio.hpp"

using namespace semiflight;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SEMIFLIGHT_CLI_PATH) + " " + args +
                            " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

int count_fields(const std::string& line) {
    int n = 1;
    for (char c : line)
        if (c == ',') ++n;
    return n;
}

}  // namespace

TEST_CASE("float formatting round-trips exactly") {
    for (double x : {0.1, 1.0 / 3.0, 1e-17, 123456.789, -2.5e300, 0.0}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
    }
}

TEST_CASE("config parsing, overrides and validation") {
    const std::string path = "test_cfg.tmp";
    {
        std::ofstream out(path);
        out << "# comment\n"
            << "alpha = 0.7\n"
            << "t_grid = 0.5, 1, 2\n"
            << "n_paths = 42\n";
    }
    auto kv = parse_config_file(path);
    auto cfg = make_config(kv, {{"experiment", "flight"}, {"alpha", "0.8"}});
    CHECK(cfg.alpha == 0.8);  // override wins
    CHECK(cfg.n_paths == 42);
    CHECK(cfg.t_grid.size() == 3);
    std::remove(path.c_str());

    CHECK_THROWS_AS(make_config({}, {{"experiment", "nope"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_config({}, {{"experiment", "flight"}, {"alpha", "2"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_config({}, {{"experiment", "flight"}, {"bogus", "1"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_config({}, {{"experiment", "flight"}, {"t_grid", "2,1"}}),
        std::invalid_argument);
}

TEST_CASE("cli: flight CSV shape (d = 3 gives 7 columns) and determinism") {
    const std::string out1 = "flight_a.csv", out2 = "flight_b.csv";
    const std::string args =
        "flight --alpha 1 --dimension 3 --n_paths 10 --t_grid 1 --seed 7 ";
    CHECK(run_cli(args + "--output_path " + out1) == 0);
    CHECK(run_cli(args + "--output_path " + out2) == 0);
    const std::string a = slurp(out1), b = slurp(out2);
    CHECK(a == b);  // byte-identical rerun
    CHECK(count_lines(a) == 11);  // header + 10 rows
    std::stringstream ss(a);
    std::string header, row;
    std::getline(ss, header);
    CHECK(header == "sample_id,t,x1,x2,x3,n_jumps,gamma");
    CHECK(count_fields(header) == 7);
    std::getline(ss, row);
    CHECK(count_fields(row) == 7);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli: worker count changes partitioning but stays deterministic") {
    const std::string out1 = "limit_w1.csv", out2 = "limit_w1_again.csv";
    const std::string args =
        "limit --alpha 0.6 --dimension 2 --n_paths 20 --t_grid 1 --seed 3 "
        "--workers 2 ";
    CHECK(run_cli(args + "--output_path " + out1) == 0);
    CHECK(run_cli(args + "--output_path " + out2) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(count_lines(slurp(out1)) == 21);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("flight --alpha 7 --output_path junk.csv") == 2);  // bad config
    CHECK(run_cli("bogus-experiment") == 2);
    // symbol-check passes and writes a report
    const std::string rep = "symbol_test.jsonl";
    CHECK(run_cli("symbol-check --alpha 0.6 --output_path " + rep) == 0);
    const std::string text = slurp(rep);
    CHECK(count_lines(text) >= 12);
    CHECK(text.find("\"pass\":true") != std::string::npos);
    std::remove(rep.c_str());
}

TEST_CASE("cli: wave-repr smoke run with small n") {
    const std::string rep = "wave_test.jsonl";
    CHECK(run_cli("wave-repr --alpha 1 --n_paths 20000 --t_grid 0.5,1 "
                  "--seed 11 --output_path " +
                  rep) == 0);
    CHECK(count_lines(slurp(rep)) == 2);
    std::remove(rep.c_str());
}
