#ifndef SEMIFLIGHT_FRACOPS_HPP
#define SEMIFLIGHT_FRACOPS_HPP

#include <complex>
#include <vector>

namespace semiflight {

// Uniformly sampled function of time, values[i] = f(i * dt).
struct GridFn1D {
    double dt = 0.0;
    std::vector<double> values;
};

// Regularized Caputo-type derivative D_t^a f on the grid, evaluated by
// product integration of the Marchaud form: piecewise-linear reconstruction
// of f(t - s) on the s-cells with exact Levy-measure moments per cell, and
// the first cell (0, dt) handled by local linearization.  Entry 0 is zero.
GridFn1D caputo_frac_deriv(const GridFn1D& f, double alpha);

// Space-time box, values(ix, it) = h(x_min + ix dx, it dt); v is the
// advection velocity carried with the data.
struct GridFnST {
    double dx = 0.0;
    double dt = 0.0;
    int nx = 0;
    int nt = 0;
    double v = 0.0;
    std::vector<double> values;  // row-major (ix, it)

    double& at(int ix, int it) {
        return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(nt) +
                      static_cast<std::size_t>(it)];
    }
    double at(int ix, int it) const {
        return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(nt) +
                      static_cast<std::size_t>(it)];
    }
};

// Regularized fractional material derivative (d_t - v d_x)^a applied to the
// grid data, with lookups along the characteristic x + v s interpolated
// linearly in space.  Requires h to vanish near the spatial boundary so
// off-grid lookups truncate cleanly; violation throws.
GridFnST frac_material_deriv(const GridFnST& h, double alpha, double v);

// Quadrature check of the symbol identity
//   int_0^inf (1 - e^{-s (lambda + i xi v)}) a s^{-a-1} / Gamma(1-a) ds
//     = (lambda + i xi v)^a ;
// returns the absolute residual against the principal-branch power.
double verify_symbol(double alpha, double v, double xi,
                     std::complex<double> lambda);

}  // namespace semiflight

#endif
