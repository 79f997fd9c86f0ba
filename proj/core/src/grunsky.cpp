#include "teichlab/grunsky.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace teichlab {

namespace {

// Dense bivariate polynomial in (x, y) = (1/z, 1/zeta), degrees 0..N each,
// symmetric in x <-> y throughout.
class Bivariate {
  public:
    explicit Bivariate(int N) : N_(N), a_((N + 1) * (N + 1), cxd(0.0)) {}

    cxd& at(int i, int j) { return a_[i * (N_ + 1) + j]; }
    cxd at(int i, int j) const { return a_[i * (N_ + 1) + j]; }

    // Truncated product; both operands symmetric, result mirrored exactly.
    Bivariate mul_symmetric(const Bivariate& o, int min_deg_this, int min_deg_o) const {
        Bivariate r(N_);
        for (int i = min_deg_this + min_deg_o; i <= N_; ++i) {
            for (int j = i; j <= N_; ++j) {
                cxd s = 0.0;
                for (int ai = min_deg_this; ai <= i - min_deg_o; ++ai) {
                    for (int aj = min_deg_this; aj <= j - min_deg_o; ++aj) {
                        const cxd c = at(ai, aj);
                        if (c == 0.0) continue;
                        s += c * o.at(i - ai, j - aj);
                    }
                }
                r.at(i, j) = s;
                r.at(j, i) = s;
            }
        }
        return r;
    }

  private:
    int N_;
    std::vector<cxd> a_;
};

}  // namespace

GrunskyMatrix grunsky_coefficients(const LaurentSeries& f, int N) {
    if (N < 1) throw std::invalid_argument("grunsky_coefficients: N must be >= 1");
    if (!f.is_sigma())
        throw std::invalid_argument("grunsky_coefficients: series is not class Sigma");
    if (!f.exact_tail() && f.length() < N + 2)
        throw std::invalid_argument(
            "grunsky_coefficients: insufficient truncation, need at least N+2 retained powers");

    const int avail = f.exact_tail() ? 2 * N - 1 : -f.lo();

    // (f(z)-f(zeta))/(z-zeta) = 1 + U(x,y) with
    // U = -sum_n b_n sum_{i+j=n-1} x^{i+1} y^{j+1}.
    Bivariate U(N);
    for (int n = 1; n <= std::min(avail, 2 * N - 1); ++n) {
        const cxd bn = f.coeff(-n);
        if (bn == 0.0) continue;
        for (int i = 0; i <= n - 1; ++i) {
            const int j = n - 1 - i;
            if (i + 1 <= N && j + 1 <= N) U.at(i + 1, j + 1) -= bn;
        }
    }

    // log(1 + U) = sum_k (-1)^{k+1} U^k / k; U^k has degree >= k per variable.
    Bivariate L = U;
    Bivariate P = U;
    double sign = -1.0;
    for (int k = 2; k <= N; ++k) {
        P = P.mul_symmetric(U, k - 1, 1);
        const double w = sign / double(k);
        for (int i = k; i <= N; ++i)
            for (int j = k; j <= N; ++j) L.at(i, j) += w * P.at(i, j);
        sign = -sign;
    }

    GrunskyMatrix G;
    G.N = N;
    G.entries.resize(N, N);
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            G.entries(m - 1, n - 1) = -std::sqrt(double(m) * double(n)) * L.at(m, n);
    return G;
}

namespace {

double sigma_max_dense(const Eigen::MatrixXcd& B) {
    if (B.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B);
    return svd.singularValues()(0);
}

double sigma_max_power(const Eigen::MatrixXcd& B, int restarts) {
    const int n = int(B.rows());
    if (n == 0) return 0.0;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> gauss;
    double best = 0.0;
    for (int rs = 0; rs < std::max(1, restarts); ++rs) {
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i) v(i) = cxd(gauss(rng), gauss(rng));
        v.normalize();
        double prev = 0.0;
        for (int it = 0; it < 5000; ++it) {
            Eigen::VectorXcd w = B.adjoint() * (B * v);
            const double lam = w.norm();
            if (lam == 0.0) break;
            v = w / lam;
            const double sigma = std::sqrt(lam);
            const bool done = it > 4 && std::abs(sigma - prev) <= 1e-13 * std::max(1.0, sigma);
            prev = sigma;
            if (done) break;
        }
        best = std::max(best, prev);
    }
    return best;
}

double sigma_max(const Eigen::MatrixXcd& B, int dense_limit, int restarts) {
    return int(B.rows()) <= dense_limit ? sigma_max_dense(B)
                                        : sigma_max_power(B, restarts);
}

}  // namespace

GrunskyNormReport grunsky_norm(const GrunskyMatrix& B, int dense_limit, int power_restarts) {
    GrunskyNormReport r;
    r.N = B.N;
    r.value = sigma_max(B.entries, dense_limit, power_restarts);
    const int h = B.N / 2;
    r.value_half = sigma_max(B.entries.topLeftCorner(h, h), dense_limit, power_restarts);
    r.converged = std::abs(r.value - r.value_half) < r.tolerance;
    return r;
}

cxd h_x_value(const GrunskyMatrix& B, const std::vector<cxd>& x) {
    if (int(x.size()) > B.N) {
        for (std::size_t i = B.N; i < x.size(); ++i)
            if (x[i] != 0.0)
                throw std::invalid_argument("h_x_value: support of x exceeds truncation");
    }
    double nrm2 = 0.0;
    for (const auto& c : x) nrm2 += std::norm(c);
    if (nrm2 > 1.0 + 1e-12) throw std::invalid_argument("h_x_value: ||x|| exceeds 1");
    const int n = std::min<int>(B.N, int(x.size()));
    cxd s = 0.0;
    for (int m = 0; m < n; ++m) {
        if (x[m] == 0.0) continue;
        for (int k = 0; k < n; ++k) s += B.entries(m, k) * x[m] * x[k];
    }
    return s;
}

double kuhnau_bound(double k, double alpha) {
    if (k < 0.0 || k >= 1.0) throw std::invalid_argument("kuhnau_bound: k must be in [0,1)");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("kuhnau_bound: alpha must be in [0,1]");
    return k * (k + alpha) / (1.0 + alpha * k);
}

}  // namespace teichlab
