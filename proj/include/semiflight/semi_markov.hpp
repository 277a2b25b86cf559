#ifndef SEMIFLIGHT_SEMI_MARKOV_HPP
#define SEMIFLIGHT_SEMI_MARKOV_HPP

#include <vector>

#include "semiflight/levy.hpp"
#include "semiflight/rng.hpp"

namespace semiflight {

// Finite velocity state space: values, a row-stochastic scattering kernel
// and per-state jump rates with sup_v theta_v < inf.
struct FiniteSpace {
    std::vector<std::vector<double>> values;  // one value vector per state
    std::vector<std::vector<double>> kernel;  // kernel[i][j] = P(i -> j)
    std::vector<double> rates;

    std::size_t size() const { return values.size(); }
    void validate() const;

    // Two states +1 / -1 with deterministic direction reversal.
    static FiniteSpace telegraph(double theta);
};

// Uniform scattering on the unit sphere S^{d-1} at a common rate; d = 1
// degenerates to independent fair draws from {+1, -1}.
struct SphereSpace {
    int d = 1;
    double theta = 1.0;
};

// Jump epochs tau_1 < ... < tau_N <= horizon and the states v_1..v_{N+1}
// (v_1 rules [0, tau_1), the trailing state is the in-progress segment).
template <class State>
struct PathT {
    double horizon = 0.0;
    std::vector<double> epochs;
    std::vector<State> states;

    long long jump_count(double t) const {
        long long n = 0;
        while (n < static_cast<long long>(epochs.size()) &&
               epochs[static_cast<std::size_t>(n)] <= t)
            ++n;
        return n;
    }
    const State& state_at(double t) const {
        return states[static_cast<std::size_t>(jump_count(t))];
    }
    // bare age gamma(t) = t - tau_{N(t)}
    double age(double t) const {
        const long long n = jump_count(t);
        return n == 0 ? t : t - epochs[static_cast<std::size_t>(n - 1)];
    }
};

using FinitePath = PathT<int>;
using SpherePath = PathT<std::vector<double>>;

FinitePath simulate_path(const FiniteSpace& space, const BernsteinSpec& spec,
                         int v0, double horizon, Rng& rng);
SpherePath simulate_path(const SphereSpace& space, const BernsteinSpec& spec,
                         const std::vector<double>& v0, double horizon, Rng& rng);

// Exact piecewise-constant occupation times H_t^v per finite state, plus
// the bare age.
struct OccupationRecord {
    std::vector<double> occupation;
    double age = 0.0;
};

OccupationRecord occupation(const FiniteSpace& space, const FinitePath& path,
                            double t);

}  // namespace semiflight

#endif
