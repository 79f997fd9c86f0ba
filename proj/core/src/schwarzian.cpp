#include "teichlab/schwarzian.hpp"

#include <cmath>

namespace teichlab {

SchwarzianSeries schwarzian(const LaurentSeries& f) {
    LaurentSeries fp = f.derivative().trimmed();
    if (fp.max_abs_coeff() == 0.0)
        throw std::invalid_argument("schwarzian: degenerate series, f' vanishes");
    LaurentSeries fpp = fp.derivative();
    LaurentSeries g = fpp * reciprocal(fp);
    LaurentSeries s = g.derivative() - 0.5 * (g * g);
    return SchwarzianSeries{s.trimmed()};
}

double homotopy_schwarzian_check(const LaurentSeries& f, cxd t) {
    if (std::abs(t) >= 1.0 || t == 0.0)
        throw std::invalid_argument("homotopy_schwarzian_check: need 0 < |t| < 1");
    LaurentSeries lhs = schwarzian(homotopy(f, t)).series;
    // t^{-2} S_f(z/t): coefficient of z^p picks up t^{-2-p}.
    LaurentSeries sf = schwarzian(f).series;
    std::vector<cxd> v(sf.length());
    for (int p = sf.lo(); p <= sf.hi(); ++p)
        v[p - sf.lo()] = sf.coeff(p) * pow_int(t, -2 - p);
    LaurentSeries rhs(sf.domain(), sf.lo(), sf.hi(), std::move(v), sf.exact_tail());
    return max_coeff_distance(lhs, rhs);
}

namespace {

double grid_max(const LaurentSeries& phi, double r_max, int n) {
    double best = 0.0;
    for (int i = 1; i <= n; ++i) {
        // cluster radii toward 1, where the weight varies fastest
        const double u = double(i) / double(n);
        const double r = 1.0 + (r_max - 1.0) * u * u;
        const double w = (r * r - 1.0) * (r * r - 1.0);
        for (int j = 0; j < n; ++j) {
            const double th = 2.0 * pi * double(j) / double(n);
            const double v = w * std::abs(phi.eval(std::polar(r, th)));
            if (v > best) best = v;
        }
    }
    return best;
}

}  // namespace

BNormEstimate b_norm_estimate(const SchwarzianSeries& phi, double r_max, int grid) {
    if (r_max <= 1.0)
        throw std::invalid_argument("b_norm_estimate: r_max must exceed 1");
    if (grid < 2) throw std::invalid_argument("b_norm_estimate: grid too small");
    const double coarse = grid_max(phi.series, r_max, grid);
    const double fine = grid_max(phi.series, r_max, 2 * grid);
    return BNormEstimate{fine, std::abs(fine - coarse)};
}

}  // namespace teichlab
