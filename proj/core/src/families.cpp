#include "teichlab/families.hpp"

#include <cmath>

namespace teichlab {

LaurentSeries b1_map(cxd b) { return bm_map(b, 1); }

LaurentSeries bm_map(cxd b, int m) {
    if (m < 1) throw std::invalid_argument("bm_map: m must be >= 1");
    std::vector<cxd> v(m + 2, cxd(0.0));
    v.front() = b;
    v.back() = 1.0;
    return LaurentSeries(SeriesDomain::Exterior, -m, 1, std::move(v), true);
}

LaurentSeries koebe_qc(cxd t, int n, int order) {
    if (n < 1) throw std::invalid_argument("koebe_qc: n must be >= 1");
    if (std::abs(t) >= 1.0) throw std::invalid_argument("koebe_qc: |t| must be < 1");
    if (order < n + 2) order = n + 2;
    if (t == 0.0) return LaurentSeries::identity(SeriesDomain::Interior);
    if (n == 1) {
        // z/(1-tz)^2 = sum_{m>=1} m t^{m-1} z^m
        std::vector<cxd> v(order);
        for (int m = 1; m <= order; ++m) v[m - 1] = double(m) * pow_int(t, m - 1);
        return LaurentSeries(SeriesDomain::Interior, 1, order, std::move(v), false);
    }
    const int base_order = order / n + 2;
    LaurentSeries f1 = koebe_qc(t, 1, base_order);
    return pow_series(substitute_power(f1, n), 1, n).truncated(1, order);
}

LaurentSeries sigma_from_s(const LaurentSeries& f) {
    if (!f.is_s_class()) throw std::invalid_argument("sigma_from_s: series is not class S");
    return reciprocal(invert_variable(f));
}

}  // namespace teichlab
