#ifndef SEMIFLIGHT_CSVIO_HPP
#define SEMIFLIGHT_CSVIO_HPP

#include <ostream>
#include <string>
#include <vector>

namespace semiflight {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double x);

// Sample table with the schema  sample_id,t,x1..xd,n_jumps,gamma.
class SampleCsvWriter {
public:
    SampleCsvWriter(std::ostream& out, int dimension);

    void write_row(long long sample_id, double t, const std::vector<double>& x,
                   long long n_jumps, double gamma);

private:
    std::ostream& out_;
    int dim_;
};

}  // namespace semiflight

#endif
