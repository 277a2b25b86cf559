#ifndef SEMIFLIGHT_EVOLUTION_HPP
#define SEMIFLIGHT_EVOLUTION_HPP

#include <functional>
#include <vector>

#include "semiflight/semi_markov.hpp"

namespace semiflight {

// Concrete one-parameter group actions realizing the evolution product:
// translation x -> x + v s and planar rotation by angle s with orientation
// v = +-1.  Both satisfy the group law in the duration argument.
struct GroupAction {
    enum class Kind { Translate, Rotate2D };
    Kind kind = Kind::Translate;
    int dim = 1;

    static GroupAction translate(int d);
    static GroupAction rotate2d();

    int point_dim() const { return kind == Kind::Rotate2D ? 2 : dim; }

    // x <- action of state value v over duration s
    void apply(const std::vector<double>& v, double s, std::vector<double>& x) const;
};

struct EvaluatedEvolution {
    std::vector<double> point;
    int state_index = 0;
};

// Applies the action segment by segment in path order up to time t.
EvaluatedEvolution evolve_point(const GroupAction& action, const FiniteSpace& space,
                                const FinitePath& path, double t,
                                const std::vector<double>& x0);

struct MomentEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
    long long n = 0;
};

// Monte Carlo mean q_v(t) of u evaluated on the evolved point and terminal
// state, over n_paths fresh paths started in v0.
MomentEstimate estimate_q(
    const GroupAction& action, const FiniteSpace& space, const BernsteinSpec& spec,
    int v0, double t,
    const std::function<double(const std::vector<double>&, int)>& u,
    long long n_paths, const std::vector<double>& x0, Rng& rng);

// Two-state representation estimator: samples the occupation difference
// gamma_t = H_t^{+1} - H_t^{-1} of the renewal telegraph chain and averages
// (w(x + gamma) + w(x - gamma)) / 2, which must agree with the direct
// product estimator for translation evolutions.
MomentEstimate estimate_q_wave_repr(const BernsteinSpec& spec, double theta,
                                    double t,
                                    const std::function<double(double)>& w_init,
                                    long long n_paths, Rng& rng, double x0 = 0.0);

}  // namespace semiflight

#endif
