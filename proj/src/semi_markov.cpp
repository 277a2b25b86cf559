#include "semiflight/semi_markov.hpp"

#include <cmath>
#include <stdexcept>

namespace semiflight {

void FiniteSpace::validate() const {
    if (values.empty() || values.size() != kernel.size() ||
        values.size() != rates.size())
        throw std::invalid_argument("FiniteSpace: inconsistent sizes");
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        if (kernel[i].size() != values.size())
            throw std::invalid_argument("FiniteSpace: kernel must be square");
        double row = 0.0;
        for (double p : kernel[i]) {
            if (p < 0.0) throw std::invalid_argument("FiniteSpace: negative kernel entry");
            row += p;
        }
        if (std::abs(row - 1.0) > 1e-12)
            throw std::invalid_argument("FiniteSpace: kernel rows must sum to 1");
        if (!(rates[i] > 0.0))
            throw std::invalid_argument("FiniteSpace: rates must be > 0");
    }
}

FiniteSpace FiniteSpace::telegraph(double theta) {
    FiniteSpace s;
    s.values = {{1.0}, {-1.0}};
    s.kernel = {{0.0, 1.0}, {1.0, 0.0}};
    s.rates = {theta, theta};
    return s;
}

namespace {

double draw_wait(const BernsteinSpec& spec, double theta, Rng& rng) {
    if (spec.is_markov()) return rng.exponential(theta);
    return sample_ml_waiting_time(spec.alpha, theta, rng);
}

int draw_next_state(const std::vector<double>& row, Rng& rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
        acc += row[j];
        if (u < acc) return static_cast<int>(j);
    }
    return static_cast<int>(row.size() - 1);
}

}  // namespace

FinitePath simulate_path(const FiniteSpace& space, const BernsteinSpec& spec,
                         int v0, double horizon, Rng& rng) {
    space.validate();
    if (v0 < 0 || static_cast<std::size_t>(v0) >= space.size())
        throw std::invalid_argument("simulate_path: invalid initial state");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_path: horizon must be > 0");
    FinitePath path;
    path.horizon = horizon;
    path.states.push_back(v0);
    double t = 0.0;
    int v = v0;
    for (;;) {
        const double j = draw_wait(spec, space.rates[static_cast<std::size_t>(v)], rng);
        if (t + j > horizon) return path;
        t += j;
        v = draw_next_state(space.kernel[static_cast<std::size_t>(v)], rng);
        path.epochs.push_back(t);
        path.states.push_back(v);
    }
}

SpherePath simulate_path(const SphereSpace& space, const BernsteinSpec& spec,
                         const std::vector<double>& v0, double horizon, Rng& rng) {
    if (space.d < 1) throw std::invalid_argument("simulate_path: d >= 1");
    if (!(space.theta > 0.0)) throw std::invalid_argument("simulate_path: theta > 0");
    if (v0.size() != static_cast<std::size_t>(space.d))
        throw std::invalid_argument("simulate_path: v0 dimension mismatch");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_path: horizon must be > 0");
    SpherePath path;
    path.horizon = horizon;
    path.states.push_back(v0);
    double t = 0.0;
    for (;;) {
        const double j = draw_wait(spec, space.theta, rng);
        if (t + j > horizon) return path;
        t += j;
        path.epochs.push_back(t);
        path.states.push_back(rng.uniform_direction(space.d));
    }
}

OccupationRecord occupation(const FiniteSpace& space, const FinitePath& path,
                            double t) {
    if (t < 0.0 || t > path.horizon)
        throw std::out_of_range("occupation: t outside the path horizon");
    OccupationRecord rec;
    rec.occupation.assign(space.size(), 0.0);
    double seg_start = 0.0;
    for (std::size_t n = 0; n <= path.epochs.size(); ++n) {
        const double seg_end = n < path.epochs.size() ? path.epochs[n] : path.horizon;
        const double upto = std::min(seg_end, t);
        if (upto > seg_start)
            rec.occupation[static_cast<std::size_t>(path.states[n])] += upto - seg_start;
        if (seg_end >= t) break;
        seg_start = seg_end;
    }
    rec.age = path.age(t);
    return rec;
}

}  // namespace semiflight
