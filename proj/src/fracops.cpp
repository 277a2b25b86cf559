#include "semiflight/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semiflight/quadrature.hpp"

namespace semiflight {

namespace {

// Levy measure nu(ds) = a s^{-a-1} / Gamma(1-a) ds of the stable clock:
// tail, cell mass and first moment over a cell.
struct StableKernel {
    double alpha;
    double g1;  // Gamma(1 - alpha)

    explicit StableKernel(double a) : alpha(a), g1(std::tgamma(1.0 - a)) {}

    double tail(double s) const { return std::pow(s, -alpha) / g1; }
    double mass(double a, double b) const { return tail(a) - tail(b); }
    double first_moment(double a, double b) const {
        return alpha * (std::pow(b, 1.0 - alpha) - std::pow(a, 1.0 - alpha)) /
               ((1.0 - alpha) * g1);
    }
};

}  // namespace

GridFn1D caputo_frac_deriv(const GridFn1D& f, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("caputo_frac_deriv: alpha in (0, 1)");
    if (!(f.dt > 0.0)) throw std::invalid_argument("caputo_frac_deriv: dt > 0");
    const std::size_t n = f.values.size();
    if (n < 4) throw std::invalid_argument("caputo_frac_deriv: need >= 4 points");

    const StableKernel k(alpha);
    const double dt = f.dt;
    const double m1_first = k.first_moment(0.0, dt);
    GridFn1D out;
    out.dt = dt;
    out.values.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double ti = static_cast<double>(i) * dt;
        const double ui = f.values[i];
        // cell (0, dt): f(t) - f(t-s) ~ s f'(t)
        const double deriv =
            i + 1 < n ? (f.values[i + 1] - f.values[i - 1]) / (2.0 * dt)
                      : (f.values[i] - f.values[i - 1]) / dt;
        double acc = deriv * m1_first;
        // cells (j dt, (j+1) dt), j = 1..i-1, with g(s) = f(t - s) linear
        for (std::size_t j = 1; j < i; ++j) {
            const double a = static_cast<double>(j) * dt;
            const double b = a + dt;
            const double m0 = k.mass(a, b);
            const double m1c = k.first_moment(a, b) - a * m0;
            const double g_a = f.values[i - j];
            const double g_b = f.values[i - j - 1];
            acc += ui * m0 - (g_a * m0 + (g_b - g_a) / dt * m1c);
        }
        // s > t: f(t - s) = 0, minus the regularizer at f(0)
        acc += k.tail(ti) * (ui - f.values[0]);
        out.values[i] = acc;
    }
    return out;
}

GridFnST frac_material_deriv(const GridFnST& h, double alpha, double v) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("frac_material_deriv: alpha in (0, 1)");
    if (!(h.dx > 0.0) || !(h.dt > 0.0) || h.nx < 3 || h.nt < 4)
        throw std::invalid_argument("frac_material_deriv: bad grid");
    if (h.values.size() != static_cast<std::size_t>(h.nx) * static_cast<std::size_t>(h.nt))
        throw std::invalid_argument("frac_material_deriv: value size mismatch");

    // boundary support: the two outermost columns must be numerically zero
    double hmax = 0.0;
    for (double x : h.values) hmax = std::max(hmax, std::abs(x));
    for (int ix : {0, 1, h.nx - 2, h.nx - 1})
        for (int it = 0; it < h.nt; ++it)
            if (std::abs(h.at(ix, it)) > 1e-10 * std::max(1.0, hmax))
                throw std::invalid_argument(
                    "frac_material_deriv: data does not vanish near the spatial boundary");

    const StableKernel k(alpha);
    const double dt = h.dt;
    const double m1_first = k.first_moment(0.0, dt);

    // linear interpolation along the characteristic; off-grid is zero
    auto lookup = [&](double ix_real, int it) -> double {
        if (ix_real <= 0.0 || ix_real >= static_cast<double>(h.nx - 1)) return 0.0;
        const int i0 = static_cast<int>(ix_real);
        const double w = ix_real - static_cast<double>(i0);
        return (1.0 - w) * h.at(i0, it) + w * h.at(i0 + 1, it);
    };

    GridFnST out = h;
    std::fill(out.values.begin(), out.values.end(), 0.0);
    const double step = v * dt / h.dx;  // grid shift per time cell
    for (int ix = 0; ix < h.nx; ++ix) {
        for (int it = 1; it < h.nt; ++it) {
            const double tj = static_cast<double>(it) * dt;
            const double hij = h.at(ix, it);
            // cell (0, dt): increment linearized through the next
            // characteristic sample
            const double g1 = lookup(static_cast<double>(ix) + step, it - 1);
            double acc = (hij - g1) / dt * m1_first;
            for (int j = 1; j < it; ++j) {
                const double a = static_cast<double>(j) * dt;
                const double b = a + dt;
                const double m0 = k.mass(a, b);
                const double m1c = k.first_moment(a, b) - a * m0;
                const double g_a =
                    lookup(static_cast<double>(ix) + step * static_cast<double>(j), it - j);
                const double g_b = lookup(
                    static_cast<double>(ix) + step * static_cast<double>(j + 1), it - j - 1);
                acc += hij * m0 - (g_a * m0 + (g_b - g_a) / dt * m1c);
            }
            // s > t contribution and the regularizing term at h(., 0)
            const double h0 = lookup(
                static_cast<double>(ix) + v * tj / h.dx, 0);
            acc += k.tail(tj) * (hij - h0);
            out.at(ix, it) = acc;
        }
    }
    return out;
}

double verify_symbol(double alpha, double v, double xi,
                     std::complex<double> lambda) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("verify_symbol: alpha in (0, 1)");
    if (!(lambda.real() > 0.0))
        throw std::domain_error("verify_symbol: Re(lambda) > 0 required");
    const std::complex<double> z = lambda + std::complex<double>(0.0, xi * v);
    const double pref = alpha / std::tgamma(1.0 - alpha);
    std::function<std::complex<double>(double)> f = [&](double s) {
        return (1.0 - std::exp(-s * z)) * (pref * std::pow(s, -alpha - 1.0));
    };
    auto q = integrate_0_inf<std::complex<double>>(f, 1e-13, 13);
    if (!q.converged)
        throw std::runtime_error("verify_symbol: quadrature did not converge");
    return std::abs(q.value - std::pow(z, alpha));
}

}  // namespace semiflight
