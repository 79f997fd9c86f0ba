#include "teichlab/metrics.hpp"

#include <cmath>

namespace teichlab {

double hyperbolic_distance(cxd t1, cxd t2) {
    if (std::abs(t1) >= 1.0 || std::abs(t2) >= 1.0)
        throw std::invalid_argument("hyperbolic_distance: arguments must lie in the open disk");
    return std::atanh(std::abs((t1 - t2) / (1.0 - std::conj(t2) * t1)));
}

double pullback_density(const HoloSampler& h, cxd t) {
    const cxd ht = h.h(t);
    if (std::abs(ht) >= 1.0)
        throw std::invalid_argument("pullback_density: map value leaves the disk");
    cxd dh;
    if (h.dh) {
        dh = h.dh(t);
    } else {
        const double d = 1e-3;
        auto f = h.h;
        dh = (8.0 * (f(t + d) - f(t - d)) - (f(t + 2 * d) - f(t - 2 * d))) / (12.0 * d);
    }
    return std::abs(dh) / (1.0 - std::norm(ht));
}

double curvature_check(const std::function<double(cxd)>& lambda, cxd t0, double h) {
    const double c = lambda(t0);
    const double e = lambda(t0 + h), w = lambda(t0 - h);
    const double n = lambda(t0 + cxd(0.0, h)), s = lambda(t0 - cxd(0.0, h));
    for (double v : {c, e, w, n, s})
        if (!(v > 0.0))
            throw std::invalid_argument("curvature_check: nonpositive density sample");
    const double lap = (std::log(e) + std::log(w) + std::log(n) + std::log(s) -
                        4.0 * std::log(c)) /
                       (h * h);
    return lap - 4.0 * c * c;
}

double caratheodory_lower_bound(const LaurentSeries& f, cxd t, int N, int restarts) {
    if (std::abs(t) >= 1.0)
        throw std::invalid_argument("caratheodory_lower_bound: |t| must be < 1");
    if (t == 0.0) return 0.0;
    const GrunskyMatrix B = grunsky_coefficients(homotopy(f, t), N);
    const GrunskyNormReport r = grunsky_norm(B, 256, restarts);
    return std::atanh(std::min(r.value, 1.0 - 1e-15));
}

double teichmuller_upper_bound(double k) {
    if (k < 0.0 || k >= 1.0)
        throw std::invalid_argument("teichmuller_upper_bound: k must be in [0,1)");
    return std::atanh(k);
}

std::vector<MetricSample> geodesic_coincidence_experiment(
    const LaurentSeries& f, const std::function<double(cxd)>& known_k,
    const std::vector<cxd>& t_grid, int N) {
    std::vector<MetricSample> rows;
    rows.reserve(t_grid.size());
    for (const cxd& t : t_grid) {
        MetricSample row;
        row.t = t;
        row.lower = caratheodory_lower_bound(f, t, N);
        row.upper = teichmuller_upper_bound(known_k(t));
        row.gap = row.upper - row.lower;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace teichlab
