#pragma once

#include <vector>

#include "teichlab/types.hpp"

namespace teichlab {

// Expansion convention of a truncated Laurent series.
//
// Exterior series are expansions at infinity: stored powers run lo..hi and
// the (possibly discarded) tail of the true function sits below lo.  The top
// power hi is hard: no terms above it exist.  Interior series mirror this,
// with a hard bottom at lo and a tail above hi.
enum class SeriesDomain { Interior, Exterior };

// Default retained depth of the formal log/exp/power expansions when the
// operand has an exact tail; window-limited operands keep their own depth.
inline constexpr int kDefaultSeriesOrder = 64;

// A truncated Laurent series with a tracked guaranteed-correct window.
//
// `exact_tail() == true` means the stored window is the whole function: there
// is no discarded tail.  Arithmetic propagates the window so that a returned
// coefficient is always exactly the coefficient of the underlying (infinite)
// series, never polluted by truncation of the operands.
class LaurentSeries {
  public:
    LaurentSeries(SeriesDomain domain, int lo, int hi, std::vector<cxd> coeffs,
                  bool exact_tail = false);

    static LaurentSeries constant(SeriesDomain d, cxd c);
    static LaurentSeries monomial(SeriesDomain d, cxd c, int power);
    // The identity map z (exact in either convention).
    static LaurentSeries identity(SeriesDomain d);

    SeriesDomain domain() const { return domain_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact_tail() const { return exact_; }
    int length() const { return hi_ - lo_ + 1; }

    // Coefficient of z^p; zero outside the stored window.
    cxd coeff(int p) const;
    const std::vector<cxd>& coeffs() const { return c_; }

    // Restrict the stored window (intersection with [new_lo, new_hi]).
    LaurentSeries truncated(int new_lo, int new_hi) const;
    // Drop exact leading/trailing zeros from the window ends that are hard.
    LaurentSeries trimmed(double eps = 0.0) const;

    bool is_sigma() const;    // exterior, hi == 1, unit coefficient at z
    bool is_s_class() const;  // interior, lo == 1, unit coefficient at z

    cxd eval(cxd z) const;
    LaurentSeries derivative() const;
    double max_abs_coeff() const;

  private:
    SeriesDomain domain_;
    int lo_, hi_;
    bool exact_;
    std::vector<cxd> c_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(cxd s, const LaurentSeries& a);
LaurentSeries operator-(const LaurentSeries& a);

// Largest coefficient difference over the intersection of the guaranteed
// windows (coefficients outside one window but inside the other count too
// when that side is hard).
double max_coeff_distance(const LaurentSeries& a, const LaurentSeries& b);

// Multiply by z^k.
LaurentSeries shift_powers(const LaurentSeries& a, int k);
// Substitute z -> z^n (n >= 1).
LaurentSeries substitute_power(const LaurentSeries& a, int n);
// Substitute z -> 1/z; flips the domain tag.
LaurentSeries invert_variable(const LaurentSeries& a);

// Formal log(1 + u) for u that vanishes at the expansion point (a constant
// term of modulus < 1 is split off and folded into the branch).  The branch
// is the one vanishing with u.  order = 0 keeps the operand's depth
// (kDefaultSeriesOrder for exact operands).
LaurentSeries log1p_series(const LaurentSeries& u, int order = 0);
// Formal exp(u) for u with small constant term.
LaurentSeries exp_series(const LaurentSeries& u, int order = 0);
// 1/a for a = c z^p (1 + u) with c != 0.
LaurentSeries reciprocal(const LaurentSeries& a, int order = 0);
// a^(num/den) for a = c z^p (1 + u); requires p*num divisible by den.
// The determination is principal, anchored at the leading coefficient.
LaurentSeries pow_series(const LaurentSeries& a, long num, long den, int order = 0);

// t*f(z/t) for f in class Sigma: coefficient of z^p picks up t^(1-p).
// t = 0 returns the identity series.
LaurentSeries homotopy(const LaurentSeries& f, cxd t);

// (f(z^2) - f0)^(1/2): the odd exterior square-root transform.  f0 is the
// designated value of the extension at the origin.
LaurentSeries sqrt_transform(const LaurentSeries& f, cxd f0, int order = 0);

}  // namespace teichlab
