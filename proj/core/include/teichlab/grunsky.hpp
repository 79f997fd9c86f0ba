#pragma once

#include <Eigen/Core>
#include <vector>

#include "teichlab/laurent.hpp"

namespace teichlab {

// Weighted Grunsky matrix of a class-Sigma map: entries sqrt(mn) * alpha_mn,
// where the alpha_mn come from the bivariate log-expansion of
// (f(z)-f(zeta))/(z-zeta) in inverse powers.  Symmetric by construction.
struct GrunskyMatrix {
    int N = 0;
    Eigen::MatrixXcd entries;  // entries(m-1, n-1) = sqrt(mn) alpha_mn

    cxd beta(int m, int n) const { return entries(m - 1, n - 1); }
    cxd alpha(int m, int n) const {
        return entries(m - 1, n - 1) / std::sqrt(double(m) * double(n));
    }
};

// Exact up to index pairs with m+n <= available_b+1, where available_b is the
// deepest retained inverse power of f (all of them when f has an exact tail).
// Requires at least N+2 retained powers.
GrunskyMatrix grunsky_coefficients(const LaurentSeries& f, int N);

struct GrunskyNormReport {
    double value = 0.0;       // sigma_max of the N x N truncation
    double value_half = 0.0;  // sigma_max of the N/2 x N/2 truncation
    bool converged = false;   // |value - value_half| < tolerance
    double tolerance = 1e-6;
    int N = 0;
};

// Largest singular value of the truncated matrix; for complex symmetric B
// this equals sup over the complex unit sphere of |x^T B x|.  A lower bound
// for the true Grunsky norm when the entries are exact.  Dense SVD up to
// dense_limit; power iteration on B^H B above it, with power_restarts
// random restarts.
GrunskyNormReport grunsky_norm(const GrunskyMatrix& B, int dense_limit = 256,
                               int power_restarts = 1);

// The bilinear form x^T B x; requires ||x||_2 <= 1 and support within 1..N.
cxd h_x_value(const GrunskyMatrix& B, const std::vector<cxd>& x);

// Upper bound k(k + alpha)/(1 + alpha k) for the Grunsky norm of a map with
// extremal dilatation k and disk pairing supremum alpha.
double kuhnau_bound(double k, double alpha);

}  // namespace teichlab
