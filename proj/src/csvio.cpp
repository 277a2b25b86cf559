#include "semiflight/csvio.hpp"

#include <charconv>
#include <stdexcept>

namespace semiflight {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

SampleCsvWriter::SampleCsvWriter(std::ostream& out, int dimension)
    : out_(out), dim_(dimension) {
    out_ << "sample_id,t";
    for (int i = 1; i <= dim_; ++i) out_ << ",x" << i;
    out_ << ",n_jumps,gamma\n";
}

void SampleCsvWriter::write_row(long long sample_id, double t,
                                const std::vector<double>& x, long long n_jumps,
                                double gamma) {
    if (x.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("SampleCsvWriter: dimension mismatch");
    out_ << sample_id << ',' << format_double(t);
    for (double xi : x) out_ << ',' << format_double(xi);
    out_ << ',' << n_jumps << ',' << format_double(gamma) << '\n';
}

}  // namespace semiflight
