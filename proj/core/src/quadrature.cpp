#include "teichlab/quadrature.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

namespace teichlab {

namespace {

constexpr double kGauss5Nodes[5] = {-0.906179845938664, -0.5384693101056831, 0.0,
                                    0.5384693101056831, 0.906179845938664};
constexpr double kGauss5Weights[5] = {0.23692688505618908, 0.47862867049936647,
                                      0.5688888888888889, 0.47862867049936647,
                                      0.23692688505618908};
constexpr double kGauss3Nodes[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGauss3Weights[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

struct Cell {
    double r0, r1, t0, t1;
    cxd val;
    double err;
    bool alive = true;
};

struct CellEval {
    cxd val;
    double err;
    bool finite;
};

// 5x5 Gauss value with the 5x5 vs 3x3 difference as the error estimate.
CellEval evaluate_cell(const std::function<cxd(cxd)>& f, double r0, double r1,
                       double t0, double t1, long& evals) {
    const double rm = 0.5 * (r0 + r1), rh = 0.5 * (r1 - r0);
    const double tm = 0.5 * (t0 + t1), th = 0.5 * (t1 - t0);
    const double jac = rh * th;
    cxd v5 = 0.0, v3 = 0.0;
    bool finite = true;
    for (int i = 0; i < 5; ++i) {
        const double r = rm + rh * kGauss5Nodes[i];
        for (int j = 0; j < 5; ++j) {
            cxd fv = f(std::polar(r, tm + th * kGauss5Nodes[j]));
            ++evals;
            if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
                finite = false;
                fv = 0.0;
            }
            v5 += kGauss5Weights[i] * kGauss5Weights[j] * fv * r;
        }
    }
    for (int i = 0; i < 3; ++i) {
        const double r = rm + rh * kGauss3Nodes[i];
        for (int j = 0; j < 3; ++j) {
            cxd fv = f(std::polar(r, tm + th * kGauss3Nodes[j]));
            ++evals;
            if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
                finite = false;
                fv = 0.0;
            }
            v3 += kGauss3Weights[i] * kGauss3Weights[j] * fv * r;
        }
    }
    v5 *= jac;
    v3 *= jac;
    return CellEval{v5, finite ? std::abs(v5 - v3) : 1e300, finite};
}

struct QueueItem {
    double err;
    std::size_t idx;
    bool operator<(const QueueItem& o) const { return err < o.err; }
};

class DiskEngine {
  public:
    DiskEngine(std::function<cxd(cxd)> f, const QuadratureOptions& opt)
        : f_(std::move(f)), opt_(opt) {}

    void seed_initial(const std::vector<cxd>& refine_points) {
        const int nr = std::max(1, opt_.initial_radial);
        const int nt = std::max(4, opt_.initial_angular);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nt; ++j)
                push_cell(double(i) / nr, double(i + 1) / nr, 2.0 * pi * j / nt,
                          2.0 * pi * (j + 1) / nt);
        // dyadic pre-refinement toward the declared singular points
        for (const auto& p : refine_points) {
            double rp = std::abs(p);
            if (rp > 1.0 + 1e-9) continue;
            rp = std::min(rp, 1.0);
            double tp = std::arg(p);
            if (tp < 0.0) tp += 2.0 * pi;
            for (int depth = 0; depth < 14; ++depth) {
                const long target = find_containing(rp, tp);
                if (target < 0) break;
                split(std::size_t(target));
            }
        }
    }

    QuadratureResult run() {
        QuadratureResult res;
        while (!queue_.empty()) {
            if (total_err_ <= opt_.tol) break;
            if (alive_count_ >= opt_.max_cells) break;
            QueueItem top = queue_.top();
            queue_.pop();
            if (top.idx >= cells_.size() || !cells_[top.idx].alive ||
                cells_[top.idx].err != top.err) {
                continue;  // stale entry
            }
            const Cell& c = cells_[top.idx];
            if (c.r1 - c.r0 < 1e-14 && c.t1 - c.t0 < 1e-14) {
                // machine-size cell: retire its error contribution
                total_err_ -= c.err;
                cells_[top.idx].err = 0.0;
                continue;
            }
            split(top.idx);
        }
        recompute_total();
        // compensated accumulation: cell values span many magnitudes
        cxd sum = 0.0, comp = 0.0;
        for (const auto& c : cells_) {
            if (!c.alive) continue;
            const cxd y = c.val - comp;
            const cxd t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        res.value = sum;
        res.error_estimate = total_err_;
        res.cells = alive_count_;
        res.evals = evals_;
        res.converged = total_err_ <= opt_.tol;
        return res;
    }

    QuadratureMesh export_mesh() const {
        QuadratureMesh mesh;
        for (const auto& c : cells_) {
            if (!c.alive) continue;
            const double rm = 0.5 * (c.r0 + c.r1), rh = 0.5 * (c.r1 - c.r0);
            const double tm = 0.5 * (c.t0 + c.t1), th = 0.5 * (c.t1 - c.t0);
            for (int i = 0; i < 5; ++i) {
                const double r = rm + rh * kGauss5Nodes[i];
                for (int j = 0; j < 5; ++j) {
                    mesh.nodes.push_back(std::polar(r, tm + th * kGauss5Nodes[j]));
                    mesh.weights.push_back(kGauss5Weights[i] * kGauss5Weights[j] * r * rh * th);
                }
            }
        }
        return mesh;
    }

  private:
    void push_cell(double r0, double r1, double t0, double t1) {
        CellEval e = evaluate_cell(f_, r0, r1, t0, t1, evals_);
        cells_.push_back(Cell{r0, r1, t0, t1, e.val, e.err, true});
        queue_.push(QueueItem{e.err, cells_.size() - 1});
        total_err_ += e.err;
        ++alive_count_;
    }

    void split(std::size_t idx) {
        Cell c = cells_[idx];
        cells_[idx].alive = false;
        total_err_ -= c.err;
        --alive_count_;
        const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
        push_cell(c.r0, rm, c.t0, tm);
        push_cell(c.r0, rm, tm, c.t1);
        push_cell(rm, c.r1, c.t0, tm);
        push_cell(rm, c.r1, tm, c.t1);
    }

    long find_containing(double r, double t) const {
        for (std::size_t i = cells_.size(); i-- > 0;) {
            const Cell& c = cells_[i];
            if (c.alive && r >= c.r0 && r <= c.r1 && t >= c.t0 && t <= c.t1)
                return long(i);
        }
        return -1;
    }

    void recompute_total() {
        double s = 0.0;
        for (const auto& c : cells_)
            if (c.alive) s += c.err;
        total_err_ = s;
    }

    std::function<cxd(cxd)> f_;
    QuadratureOptions opt_;
    std::vector<Cell> cells_;
    std::priority_queue<QueueItem> queue_;
    double total_err_ = 0.0;
    long alive_count_ = 0;
    long evals_ = 0;
};

}  // namespace

QuadratureResult integrate_disk(const std::function<cxd(cxd)>& f,
                                const std::vector<cxd>& refine_points,
                                const QuadratureOptions& opt) {
    DiskEngine eng(f, opt);
    eng.seed_initial(refine_points);
    return eng.run();
}

QuadratureResult integrate_exterior(const std::function<cxd(cxd)>& f,
                                    const std::vector<cxd>& refine_points,
                                    const QuadratureOptions& opt) {
    auto g = [&f](cxd w) -> cxd {
        const double a2 = std::norm(w);
        if (a2 == 0.0) return 0.0;
        return f(1.0 / w) / (a2 * a2);
    };
    std::vector<cxd> hints;
    hints.push_back(0.0);
    for (const auto& p : refine_points)
        if (std::abs(p) > 1e-12) hints.push_back(1.0 / p);
    return integrate_disk(g, hints, opt);
}

QuadratureResult integrate_domain(PlanarDomain d, const std::function<cxd(cxd)>& f,
                                  const std::vector<cxd>& refine_points,
                                  const QuadratureOptions& opt) {
    return d == PlanarDomain::Disk ? integrate_disk(f, refine_points, opt)
                                   : integrate_exterior(f, refine_points, opt);
}

QuadratureMesh build_disk_mesh(const std::function<cxd(cxd)>& weight_fn,
                               const std::vector<cxd>& refine_points,
                               const QuadratureOptions& opt) {
    DiskEngine eng(weight_fn, opt);
    eng.seed_initial(refine_points);
    eng.run();
    return eng.export_mesh();
}

QuadratureResult l1_norm_report(const QuadDiff& psi, const QuadratureOptions& opt) {
    auto f = [&psi](cxd z) -> cxd { return std::abs(psi.eval(z)); };
    return integrate_domain(psi.domain(), f, psi.poles(), opt);
}

double l1_norm(const QuadDiff& psi, double tol) {
    QuadratureOptions opt;
    opt.tol = tol;
    QuadratureResult r = l1_norm_report(psi, opt);
    if (!r.converged)
        throw convergence_error("l1_norm: tolerance not reached within cell budget");
    return r.value.real();
}

namespace {

void check_grid_support_in_disk(const BeltramiField& mu) {
    const GridSpec& g = mu.grid_spec();
    const double h = g.spacing();
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix)
            if (mu.samples()[g.index(ix, iy)] != 0.0 &&
                std::abs(g.center(ix, iy)) > 1.0 + h)
                throw std::invalid_argument("pairing: grid field supported outside the disk");
}

}  // namespace

QuadratureResult pairing_report(const BeltramiField& mu, const QuadDiff& psi,
                                const QuadratureOptions& opt) {
    if (mu.is_grid()) {
        if (psi.domain() != PlanarDomain::Disk)
            throw std::invalid_argument("pairing: grid fields pair over the disk only");
        check_grid_support_in_disk(mu);
        const GridSpec& g = mu.grid_spec();
        const double h = g.spacing(), w = h * h;
        QuadratureResult res;
        cxd sum = 0.0;
        for (int iy = 0; iy < g.n; ++iy) {
            for (int ix = 0; ix < g.n; ++ix) {
                const cxd m = mu.samples()[g.index(ix, iy)];
                if (m == 0.0) continue;
                sum += m * psi.eval(g.center(ix, iy)) * w;
                ++res.cells;
            }
        }
        res.value = sum;
        res.evals = res.cells;
        res.converged = true;
        return res;
    }
    auto f = [&](cxd z) -> cxd { return mu.value(z) * psi.eval(z); };
    std::vector<cxd> hints = psi.poles();
    const auto& mp = mu.form().poles();
    hints.insert(hints.end(), mp.begin(), mp.end());
    return integrate_domain(psi.domain(), f, hints, opt);
}

cxd pairing(const BeltramiField& mu, const QuadDiff& psi, double tol) {
    QuadratureOptions opt;
    opt.tol = tol;
    QuadratureResult r = pairing_report(mu, psi, opt);
    if (!r.converged)
        throw convergence_error("pairing: tolerance not reached within cell budget");
    return r.value;
}

std::vector<cxd> disk_moments(const BeltramiField& mu, int pmax, double tol) {
    std::vector<cxd> moments(pmax + 1, cxd(0.0));
    if (mu.is_grid()) {
        check_grid_support_in_disk(mu);
        const GridSpec& g = mu.grid_spec();
        const double w = g.spacing() * g.spacing();
        for (int iy = 0; iy < g.n; ++iy) {
            for (int ix = 0; ix < g.n; ++ix) {
                const cxd m = mu.samples()[g.index(ix, iy)];
                if (m == 0.0) continue;
                const cxd z = g.center(ix, iy);
                cxd zp = 1.0;
                for (int p = 0; p <= pmax; ++p) {
                    moments[p] += m * zp * w;
                    zp *= z;
                }
            }
        }
        return moments;
    }
    QuadratureOptions opt;
    opt.tol = tol;
    for (int p = 0; p <= pmax; ++p) {
        auto f = [&, p](cxd z) -> cxd { return mu.value(z) * pow_int(z, p); };
        moments[p] = integrate_disk(f, mu.form().poles(), opt).value;
    }
    return moments;
}

double alpha_D(const BeltramiField& mu, int basis_size, int restarts,
               std::uint64_t seed, double tol) {
    if (basis_size < 1) throw std::invalid_argument("alpha_D: basis_size must be >= 1");
    const std::vector<cxd> M = disk_moments(mu, 2 * basis_size - 2, tol);
    Eigen::MatrixXcd A(basis_size, basis_size);
    for (int m = 1; m <= basis_size; ++m)
        for (int n = 1; n <= basis_size; ++n)
            A(m - 1, n - 1) = std::sqrt(double(m) * double(n)) * M[m + n - 2] / pi;
    if (A.norm() == 0.0) return 0.0;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    double best = 0.0;
    for (int rs = 0; rs <= std::max(0, restarts); ++rs) {
        Eigen::VectorXcd x(basis_size);
        if (rs == 0) {
            x.setZero();
            x(0) = 1.0;
        } else {
            for (int i = 0; i < basis_size; ++i) x(i) = cxd(gauss(rng), gauss(rng));
        }
        x.normalize();
        auto bilinear = [&A](const Eigen::VectorXcd& v) -> cxd {
            return (v.transpose() * A * v).value();
        };
        double fval = std::abs(bilinear(x));
        double step = 0.5;
        for (int it = 0; it < 1000 && step > 1e-14; ++it) {
            const Eigen::VectorXcd Ax = A * x;
            const cxd q = (x.transpose() * Ax).value();
            const cxd phase = std::abs(q) > 1e-300 ? q / std::abs(q) : cxd(1.0);
            const Eigen::VectorXcd g = (phase * Ax).conjugate();
            if (g.norm() == 0.0) break;
            Eigen::VectorXcd xn = (x + step * g).normalized();
            const double fn = std::abs(bilinear(xn));
            if (fn > fval + 1e-16) {
                x = xn;
                fval = fn;
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }
        best = std::max(best, fval);
    }
    return best;
}

}  // namespace teichlab
