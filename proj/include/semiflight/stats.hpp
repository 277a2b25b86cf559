#ifndef SEMIFLIGHT_STATS_HPP
#define SEMIFLIGHT_STATS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace semiflight {

// Streaming first/second moment accumulator.  Merging adds sufficient
// statistics, so worker partials combine deterministically in rank order.
struct MomentAccumulator {
    long long n = 0;
    double sum = 0.0;
    double sumsq = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    void merge(const MomentAccumulator& o) {
        n += o.n;
        sum += o.sum;
        sumsq += o.sumsq;
    }
    double mean() const;
    double variance() const;  // unbiased
    double stderr_mean() const;
};

// Kolmogorov-Smirnov distance between a sample and a continuous CDF.
// Sorts a copy of the sample.
double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf);

// Two-sample KS statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Least squares y = a + b x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Fit of log y against log x; inputs must be positive.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// Standard error of a binomial proportion estimate.
double binomial_stderr(double p_hat, long long n);

}  // namespace semiflight

#endif
