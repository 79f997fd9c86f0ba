#include "teichlab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teichlab {

namespace {

constexpr int kNoFloor = std::numeric_limits<int>::min() / 4;
constexpr int kNoCeil = std::numeric_limits<int>::max() / 4;

void check_same_domain(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.domain() != b.domain())
        throw std::invalid_argument("laurent: domain-tag mismatch");
}

}  // namespace

LaurentSeries::LaurentSeries(SeriesDomain domain, int lo, int hi,
                             std::vector<cxd> coeffs, bool exact_tail)
    : domain_(domain), lo_(lo), hi_(hi), exact_(exact_tail), c_(std::move(coeffs)) {
    if (hi_ < lo_) throw std::invalid_argument("laurent: empty window (hi < lo)");
    if (static_cast<int>(c_.size()) != hi_ - lo_ + 1)
        throw std::invalid_argument("laurent: coefficient count does not match window");
}

LaurentSeries LaurentSeries::constant(SeriesDomain d, cxd c) {
    return LaurentSeries(d, 0, 0, {c}, true);
}

LaurentSeries LaurentSeries::monomial(SeriesDomain d, cxd c, int power) {
    return LaurentSeries(d, power, power, {c}, true);
}

LaurentSeries LaurentSeries::identity(SeriesDomain d) {
    return monomial(d, 1.0, 1);
}

cxd LaurentSeries::coeff(int p) const {
    if (p < lo_ || p > hi_) return 0.0;
    return c_[p - lo_];
}

LaurentSeries LaurentSeries::truncated(int new_lo, int new_hi) const {
    int l = std::max(lo_, new_lo), h = std::min(hi_, new_hi);
    if (h < l) return LaurentSeries(domain_, new_lo, new_lo, {cxd(0.0)}, exact_);
    std::vector<cxd> v(c_.begin() + (l - lo_), c_.begin() + (h - lo_ + 1));
    // Cutting into the tail side invalidates exactness.
    bool ex = exact_;
    if (domain_ == SeriesDomain::Exterior && l > lo_) ex = false;
    if (domain_ == SeriesDomain::Interior && h < hi_) ex = false;
    return LaurentSeries(domain_, l, h, std::move(v), ex);
}

LaurentSeries LaurentSeries::trimmed(double eps) const {
    int l = lo_, h = hi_;
    auto is_zero = [&](int p) { return std::abs(coeff(p)) <= eps; };
    // Hard side may always be trimmed; tail side only when exact.
    if (domain_ == SeriesDomain::Exterior) {
        while (h > l && is_zero(h)) --h;
        if (exact_)
            while (l < h && is_zero(l)) ++l;
    } else {
        while (l < h && is_zero(l)) ++l;
        if (exact_)
            while (h > l && is_zero(h)) --h;
    }
    std::vector<cxd> v(c_.begin() + (l - lo_), c_.begin() + (h - lo_ + 1));
    return LaurentSeries(domain_, l, h, std::move(v), exact_);
}

bool LaurentSeries::is_sigma() const {
    return domain_ == SeriesDomain::Exterior && hi_ == 1 &&
           std::abs(coeff(1) - 1.0) <= 1e-12;
}

bool LaurentSeries::is_s_class() const {
    return domain_ == SeriesDomain::Interior && lo_ == 1 &&
           std::abs(coeff(1) - 1.0) <= 1e-12;
}

cxd LaurentSeries::eval(cxd z) const {
    cxd zp = pow_int(z, lo_);
    cxd sum = 0.0;
    for (int p = lo_; p <= hi_; ++p) {
        sum += c_[p - lo_] * zp;
        zp *= z;
    }
    return sum;
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<cxd> v(c_.size());
    for (int p = lo_; p <= hi_; ++p) v[p - lo_] = c_[p - lo_] * double(p);
    return LaurentSeries(domain_, lo_ - 1, hi_ - 1, std::move(v), exact_);
}

double LaurentSeries::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    check_same_domain(a, b);
    const bool ext = a.domain() == SeriesDomain::Exterior;
    bool exact = a.exact_tail() && b.exact_tail();
    int lo, hi;
    if (ext) {
        hi = std::max(a.hi(), b.hi());
        if (exact) {
            lo = std::min(a.lo(), b.lo());
        } else {
            int floor = kNoFloor;
            if (!a.exact_tail()) floor = std::max(floor, a.lo());
            if (!b.exact_tail()) floor = std::max(floor, b.lo());
            lo = floor;
        }
    } else {
        lo = std::min(a.lo(), b.lo());
        if (exact) {
            hi = std::max(a.hi(), b.hi());
        } else {
            int ceil = kNoCeil;
            if (!a.exact_tail()) ceil = std::min(ceil, a.hi());
            if (!b.exact_tail()) ceil = std::min(ceil, b.hi());
            hi = ceil;
        }
    }
    if (hi < lo) hi = lo;  // degenerate overlap: keep a one-entry window
    std::vector<cxd> v(hi - lo + 1);
    for (int p = lo; p <= hi; ++p) v[p - lo] = a.coeff(p) + b.coeff(p);
    return LaurentSeries(a.domain(), lo, hi, std::move(v), exact);
}

LaurentSeries operator-(const LaurentSeries& a) {
    std::vector<cxd> v(a.coeffs());
    for (auto& c : v) c = -c;
    return LaurentSeries(a.domain(), a.lo(), a.hi(), std::move(v), a.exact_tail());
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(cxd s, const LaurentSeries& a) {
    std::vector<cxd> v(a.coeffs());
    for (auto& c : v) c *= s;
    return LaurentSeries(a.domain(), a.lo(), a.hi(), std::move(v), a.exact_tail());
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    check_same_domain(a, b);
    const bool ext = a.domain() == SeriesDomain::Exterior;
    bool exact = a.exact_tail() && b.exact_tail();
    const int conv_lo = a.lo() + b.lo(), conv_hi = a.hi() + b.hi();
    int lo = conv_lo, hi = conv_hi;
    if (!exact) {
        if (ext) {
            int floor = kNoFloor;
            if (!a.exact_tail()) floor = std::max(floor, a.lo() + b.hi());
            if (!b.exact_tail()) floor = std::max(floor, b.lo() + a.hi());
            lo = std::max(conv_lo, floor);
        } else {
            int ceil = kNoCeil;
            if (!a.exact_tail()) ceil = std::min(ceil, a.hi() + b.lo());
            if (!b.exact_tail()) ceil = std::min(ceil, b.hi() + a.lo());
            hi = std::min(conv_hi, ceil);
        }
    }
    if (hi < lo) hi = lo;
    std::vector<cxd> v(hi - lo + 1, cxd(0.0));
    for (int p = a.lo(); p <= a.hi(); ++p) {
        const cxd ap = a.coeff(p);
        if (ap == 0.0) continue;
        const int q0 = std::max(b.lo(), lo - p), q1 = std::min(b.hi(), hi - p);
        for (int q = q0; q <= q1; ++q) v[p + q - lo] += ap * b.coeff(q);
    }
    return LaurentSeries(a.domain(), lo, hi, std::move(v), exact);
}

double max_coeff_distance(const LaurentSeries& a, const LaurentSeries& b) {
    check_same_domain(a, b);
    const bool ext = a.domain() == SeriesDomain::Exterior;
    int from, to;
    if (ext) {
        to = std::max(a.hi(), b.hi());
        if (a.exact_tail() && b.exact_tail())
            from = std::min(a.lo(), b.lo());
        else {
            from = kNoFloor;
            if (!a.exact_tail()) from = std::max(from, a.lo());
            if (!b.exact_tail()) from = std::max(from, b.lo());
        }
    } else {
        from = std::min(a.lo(), b.lo());
        if (a.exact_tail() && b.exact_tail())
            to = std::max(a.hi(), b.hi());
        else {
            to = kNoCeil;
            if (!a.exact_tail()) to = std::min(to, a.hi());
            if (!b.exact_tail()) to = std::min(to, b.hi());
        }
    }
    double d = 0.0;
    for (int p = from; p <= to; ++p) d = std::max(d, std::abs(a.coeff(p) - b.coeff(p)));
    return d;
}

LaurentSeries shift_powers(const LaurentSeries& a, int k) {
    return LaurentSeries(a.domain(), a.lo() + k, a.hi() + k, a.coeffs(), a.exact_tail());
}

LaurentSeries substitute_power(const LaurentSeries& a, int n) {
    if (n < 1) throw std::invalid_argument("substitute_power: n must be >= 1");
    if (n == 1) return a;
    std::vector<cxd> v((a.hi() - a.lo()) * n + 1, cxd(0.0));
    for (int p = a.lo(); p <= a.hi(); ++p) v[(p - a.lo()) * n] = a.coeff(p);
    return LaurentSeries(a.domain(), a.lo() * n, a.hi() * n, std::move(v), a.exact_tail());
}

LaurentSeries invert_variable(const LaurentSeries& a) {
    std::vector<cxd> v(a.coeffs());
    std::reverse(v.begin(), v.end());
    SeriesDomain d = a.domain() == SeriesDomain::Exterior ? SeriesDomain::Interior
                                                          : SeriesDomain::Exterior;
    return LaurentSeries(d, -a.hi(), -a.lo(), std::move(v), a.exact_tail());
}

namespace {

// Depth of the strictly-small part: how many formal orders the window holds.
int small_depth(const LaurentSeries& v) {
    if (v.domain() == SeriesDomain::Exterior) return std::max(0, -v.lo());
    return std::max(0, v.hi());
}

// Summation depth for the transcendental ops: a window-limited input can
// never be trusted beyond its own depth, while an exact input supports any
// depth and gets the configured default.
int target_depth(const LaurentSeries& v, int order) {
    if (order > 0) return order;
    const int d = small_depth(v);
    return v.exact_tail() ? std::max(d, kDefaultSeriesOrder) : d;
}

// Restrict a formal-small accumulator to depth K; a cut on the tail side
// discards real coefficients, so only then does the exactness claim drop.
LaurentSeries cap_depth(const LaurentSeries& a, int K) {
    const bool ext = a.domain() == SeriesDomain::Exterior;
    if (ext ? a.lo() >= -K : a.hi() <= K) return a;
    int lo = ext ? -K : a.lo();
    int hi = ext ? a.hi() : K;
    if (hi < lo) hi = lo;
    std::vector<cxd> v(hi - lo + 1);
    for (int p = lo; p <= hi; ++p) v[p - lo] = a.coeff(p);
    return LaurentSeries(a.domain(), lo, hi, std::move(v), false);
}

// Splits u = c + v with v strictly small (no constant term, powers on the
// small side only).  Throws if u has terms on the growing side.
std::pair<cxd, LaurentSeries> split_constant(const LaurentSeries& u) {
    const bool ext = u.domain() == SeriesDomain::Exterior;
    if ((ext && u.hi() > 0) || (!ext && u.lo() < 0))
        throw std::invalid_argument("laurent: operand is not formally small");
    cxd c = u.coeff(0);
    LaurentSeries v = (u - LaurentSeries::constant(u.domain(), c)).trimmed();
    return {c, v};
}

bool strictly_zero(const LaurentSeries& v) {
    for (const auto& c : v.coeffs())
        if (c != 0.0) return false;
    return true;
}

}  // namespace

LaurentSeries log1p_series(const LaurentSeries& u, int order) {
    auto [c, v] = split_constant(u);
    if (std::abs(c + 1.0) < 1e-300)
        throw std::invalid_argument("log1p_series: constant term -1, logarithm singular");
    if (std::abs(c) >= 1.0)
        throw std::invalid_argument("log1p_series: constant term of modulus >= 1");
    const cxd base = std::log(1.0 + c);
    if (strictly_zero(v)) return LaurentSeries::constant(u.domain(), base);
    // v also gets divided by 1 + c: log(1+u) = log(1+c) + log(1 + v/(1+c)).
    v = (1.0 / (1.0 + c)) * v;
    const int K = target_depth(v, order);
    LaurentSeries acc = v;
    LaurentSeries pw = v;
    double sign = -1.0;
    for (int k = 2; k <= K; ++k) {
        pw = cap_depth(pw * v, K);
        acc = acc + (sign / double(k)) * pw;
        sign = -sign;
    }
    return cap_depth(acc, K) + LaurentSeries::constant(u.domain(), base);
}

LaurentSeries exp_series(const LaurentSeries& u, int order) {
    auto [c, v] = split_constant(u);
    const cxd base = std::exp(c);
    if (strictly_zero(v)) return LaurentSeries::constant(u.domain(), base);
    const int K = target_depth(v, order);
    LaurentSeries acc = LaurentSeries::constant(u.domain(), 1.0) + v;
    LaurentSeries pw = v;
    double fact = 1.0;
    for (int k = 2; k <= K; ++k) {
        pw = cap_depth(pw * v, K);
        fact *= double(k);
        acc = acc + (1.0 / fact) * pw;
    }
    return base * cap_depth(acc, K);
}

namespace {

// Factor a = c z^p (1 + u): returns (c, p, u) with u strictly small.
std::tuple<cxd, int, LaurentSeries> factor_leading(const LaurentSeries& a) {
    const bool ext = a.domain() == SeriesDomain::Exterior;
    LaurentSeries t = a.trimmed();
    const int p = ext ? t.hi() : t.lo();
    const cxd c = t.coeff(p);
    if (std::abs(c) < 1e-300)
        throw std::invalid_argument("laurent: zero leading coefficient");
    LaurentSeries norm = (1.0 / c) * shift_powers(t, -p);
    LaurentSeries u = (norm - LaurentSeries::constant(a.domain(), 1.0)).trimmed();
    return {c, p, u};
}

}  // namespace

LaurentSeries reciprocal(const LaurentSeries& a, int order) {
    auto [c, p, u] = factor_leading(a);
    if (strictly_zero(u)) return LaurentSeries::monomial(a.domain(), 1.0 / c, -p);
    const int K = target_depth(u, order);
    LaurentSeries acc = LaurentSeries::constant(a.domain(), 1.0) - u;
    LaurentSeries pw = u;
    double sign = 1.0;
    for (int k = 2; k <= K; ++k) {
        pw = cap_depth(pw * u, K);
        acc = acc + sign * pw;
        sign = -sign;
    }
    return (1.0 / c) * shift_powers(cap_depth(acc, K), -p);
}

LaurentSeries pow_series(const LaurentSeries& a, long num, long den, int order) {
    if (den == 0) throw std::invalid_argument("pow_series: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    auto [c, p, u] = factor_leading(a);
    if ((static_cast<long>(p) * num) % den != 0)
        throw std::invalid_argument("pow_series: p*r is not an integer");
    const int q = static_cast<int>(static_cast<long>(p) * num / den);
    const double r = double(num) / double(den);
    const cxd cr = std::pow(c, cxd(r, 0.0));
    if (strictly_zero(u)) return LaurentSeries::monomial(a.domain(), cr, q);
    LaurentSeries body = exp_series(r * log1p_series(u, order), order);
    return cr * shift_powers(body, q);
}

LaurentSeries homotopy(const LaurentSeries& f, cxd t) {
    if (!f.is_sigma()) throw std::invalid_argument("homotopy: series is not class Sigma");
    if (std::abs(t) >= 1.0) throw std::invalid_argument("homotopy: |t| must be < 1");
    if (t == 0.0) return LaurentSeries::identity(SeriesDomain::Exterior);
    std::vector<cxd> v(f.length());
    for (int p = f.lo(); p <= f.hi(); ++p)
        v[p - f.lo()] = f.coeff(p) * pow_int(t, 1 - p);
    return LaurentSeries(f.domain(), f.lo(), f.hi(), std::move(v), f.exact_tail());
}

LaurentSeries sqrt_transform(const LaurentSeries& f, cxd f0, int order) {
    if (!f.is_sigma()) throw std::invalid_argument("sqrt_transform: series is not class Sigma");
    LaurentSeries g = substitute_power(f, 2) - LaurentSeries::constant(SeriesDomain::Exterior, f0);
    return pow_series(g, 1, 2, order);
}

}  // namespace teichlab
