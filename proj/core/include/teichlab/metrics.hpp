#pragma once

#include <functional>

#include "teichlab/grunsky.hpp"

namespace teichlab {

// Hyperbolic distance of curvature -4 on the unit disk:
// tanh^{-1} |(t1-t2)/(1 - conj(t2) t1)|.
double hyperbolic_distance(cxd t1, cxd t2);

// A holomorphic map into the disk with an optional analytic derivative;
// without one the derivative is taken by a high-order central difference.
struct HoloSampler {
    std::function<cxd(cxd)> h;
    std::function<cxd(cxd)> dh;  // may be empty
};

// |h'(t)| / (1 - |h(t)|^2), the pullback of the curvature -4 density.
double pullback_density(const HoloSampler& h, cxd t);

// Five-point stencil residual  (laplacian of log lambda)(t0) - 4 lambda(t0)^2;
// vanishes at rate h^2 for densities of curvature -4.
double curvature_check(const std::function<double(cxd)>& lambda, cxd t0, double h);

// tanh^{-1} of the Grunsky norm of the homotopy t f(z/t): a lower bound for
// the Caratheodory distance from the base point, monotone in the truncation.
double caratheodory_lower_bound(const LaurentSeries& f, cxd t, int N, int restarts = 1);

// tanh^{-1} k: the Teichmueller distance from the base point of a map with
// extremal dilatation k; dominates the Caratheodory distance.
double teichmuller_upper_bound(double k);

struct MetricSample {
    cxd t;
    double lower = 0.0;
    double upper = 0.0;
    double gap = 0.0;
};

// Tabulates the Grunsky lower bound against the Teichmueller upper bound
// over the homotopy parameter grid; known_k supplies the extremal dilatation
// of the homotopy at each t.
std::vector<MetricSample> geodesic_coincidence_experiment(
    const LaurentSeries& f, const std::function<double(cxd)>& known_k,
    const std::vector<cxd>& t_grid, int N = 32);

}  // namespace teichlab
