#include "teichlab/beltrami_solver.hpp"

#include <fftw3.h>

#include <cmath>

namespace teichlab {

namespace {

class BeurlingTransform {
  public:
    BeurlingTransform(double half_width, int n) : n_(n) {
        const std::size_t sz = std::size_t(n) * std::size_t(n);
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * sz));
        fwd_ = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
        mult_.resize(sz);
        const double k0 = pi / half_width;  // wavenumber spacing 2*pi/(2L)
        for (int iy = 0; iy < n; ++iy) {
            const int my = iy <= n / 2 ? iy : iy - n;
            for (int ix = 0; ix < n; ++ix) {
                const int mx = ix <= n / 2 ? ix : ix - n;
                const cxd xi(k0 * mx, k0 * my);
                mult_[std::size_t(iy) * n + ix] = xi == 0.0 ? 0.0 : std::conj(xi) / xi;
            }
        }
    }
    ~BeurlingTransform() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(buf_);
    }
    BeurlingTransform(const BeurlingTransform&) = delete;
    BeurlingTransform& operator=(const BeurlingTransform&) = delete;

    void apply(const std::vector<cxd>& in, std::vector<cxd>& out) {
        const std::size_t sz = in.size();
        auto* b = reinterpret_cast<cxd*>(buf_);
        std::copy(in.begin(), in.end(), b);
        fftw_execute(fwd_);
        const double scale = 1.0 / double(sz);
        for (std::size_t i = 0; i < sz; ++i) b[i] *= mult_[i] * scale;
        fftw_execute(bwd_);
        out.assign(b, b + sz);
    }

  private:
    int n_;
    fftw_complex* buf_;
    fftw_plan fwd_, bwd_;
    std::vector<cxd> mult_;
};

}  // namespace

cxd BeltramiSolution::cauchy_transform(cxd z) const {
    const double h = grid.spacing(), w = h * h;
    cxd s = 0.0;
    for (int iy = 0; iy < grid.n; ++iy) {
        for (int ix = 0; ix < grid.n; ++ix) {
            const cxd p = phi[grid.index(ix, iy)];
            if (p == 0.0) continue;
            const cxd d = grid.center(ix, iy) - z;
            if (std::abs(d) < 0.5 * h) continue;  // skip the singular cell
            s += p / d * w;
        }
    }
    return -s / pi;
}

cxd BeltramiSolution::map_value(cxd z) const { return z + cauchy_transform(z) - shift; }

cxd BeltramiSolution::map_jet(cxd z, int order) const {
    if (order == 0) return map_value(z);
    const double h = grid.spacing(), w = h * h;
    double factorial = 1.0;
    for (int s = 2; s <= order; ++s) factorial *= double(s);
    cxd sum = 0.0;
    for (int iy = 0; iy < grid.n; ++iy) {
        for (int ix = 0; ix < grid.n; ++ix) {
            const cxd p = phi[grid.index(ix, iy)];
            if (p == 0.0) continue;
            const cxd d = grid.center(ix, iy) - z;
            if (std::abs(d) < 0.5 * h) continue;
            sum += p / pow_int(d, order + 1) * w;
        }
    }
    return (order == 1 ? 1.0 : 0.0) - factorial * sum / pi;
}

BeltramiSolution solve_beltrami(const BeltramiField& mu, const SolverOptions& opt) {
    if (!mu.is_grid())
        throw std::invalid_argument("solve_beltrami: mu must be a grid field");
    const GridSpec g = mu.grid_spec();
    const std::vector<cxd>& m = mu.samples();
    const double h = g.spacing();

    // periodization demands padding: support inside the central quarter
    const double support_limit = g.half_width / 2.0 + h;
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix)
            if (m[g.index(ix, iy)] != 0.0) {
                const cxd c = g.center(ix, iy);
                if (std::max(std::abs(c.real()), std::abs(c.imag())) > support_limit)
                    throw std::invalid_argument(
                        "solve_beltrami: support exceeds the padded window (factor >= 4 required)");
            }

    BeurlingTransform beurling(g.half_width, g.n);
    const std::size_t sz = m.size();
    std::vector<cxd> phi(m), bphi(sz, cxd(0.0)), next(sz);

    int iterations = 0;
    double increment = 0.0;
    bool converged = false;
    for (int it = 1; it <= opt.max_iter; ++it) {
        beurling.apply(phi, bphi);
        increment = 0.0;
        for (std::size_t i = 0; i < sz; ++i) {
            next[i] = m[i] * bphi[i] + m[i];
            increment = std::max(increment, std::abs(next[i] - phi[i]));
        }
        phi.swap(next);
        iterations = it;
        if (increment <= opt.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw convergence_error("solve_beltrami: Neumann iteration did not converge");

    beurling.apply(phi, bphi);

    // fixed-point residual, skipping cells within two cells of the support edge
    auto in_support = [&](int ix, int iy) {
        return ix >= 0 && iy >= 0 && ix < g.n && iy < g.n && m[g.index(ix, iy)] != 0.0;
    };
    double residual = 0.0;
    for (int iy = 0; iy < g.n; ++iy) {
        for (int ix = 0; ix < g.n; ++ix) {
            if (!in_support(ix, iy)) continue;
            bool interior = true;
            for (int dy = -2; dy <= 2 && interior; ++dy)
                for (int dx = -2; dx <= 2 && interior; ++dx)
                    if (!in_support(ix + dx, iy + dy)) interior = false;
            if (!interior) continue;
            const std::size_t i = g.index(ix, iy);
            residual = std::max(residual, std::abs(phi[i] - m[i] * (1.0 + bphi[i])));
        }
    }

    BeltramiSolution sol;
    sol.grid = g;
    sol.phi = std::move(phi);
    sol.beurling_phi = std::move(bphi);
    sol.residual_sup = residual;
    sol.iterations = iterations;

    if (opt.normalization == Normalization::FixPointOne)
        sol.shift = sol.cauchy_transform(1.0);

    // exterior Laurent fit from equispaced circle samples
    const int M = opt.fit_samples, K = opt.fit_modes;
    const double R = opt.fit_radius;
    std::vector<cxd> gs(M);
    for (int q = 0; q < M; ++q) {
        const cxd z = std::polar(R, 2.0 * pi * q / M);
        gs[q] = sol.map_value(z) - z;
    }
    std::vector<cxd> coeffs(K + 2, cxd(0.0));  // powers -K..1
    coeffs[K + 1] = 1.0;
    for (int k = 0; k <= K; ++k) {
        cxd acc = 0.0;
        for (int q = 0; q < M; ++q)
            acc += gs[q] * std::polar(1.0, 2.0 * pi * k * q / M);
        coeffs[K - k] = acc * pow_int(cxd(R, 0.0), k) / double(M);
    }
    sol.exterior_fit = LaurentSeries(SeriesDomain::Exterior, -K, 1, std::move(coeffs), false);
    return sol;
}

cxd evaluate_functional(const FunctionalSpec& J, const BeltramiSolution& sol) {
    return J.evaluate([&sol](cxd z, int s) { return sol.map_jet(z, s); });
}

BeltramiField sample_disk_field(const std::function<cxd(cxd)>& mu_fn, double half_width,
                                int n) {
    GridSpec g{half_width, n};
    std::vector<cxd> samples(std::size_t(n) * std::size_t(n), cxd(0.0));
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const cxd c = g.center(ix, iy);
            if (std::abs(c) < 1.0) samples[g.index(ix, iy)] = mu_fn(c);
        }
    }
    return BeltramiField::grid(g, std::move(samples));
}

}  // namespace teichlab
