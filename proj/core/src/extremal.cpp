#include "teichlab/extremal.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace teichlab {

std::vector<QuadDiff> rho_basis(const std::vector<cxd>& e) {
    std::vector<QuadDiff> basis;
    basis.reserve(e.size());
    for (std::size_t s = 0; s < e.size(); ++s) {
        const bool inf_s = !std::isfinite(e[s].real()) || !std::isfinite(e[s].imag());
        for (std::size_t r = 0; r < s; ++r) {
            const bool inf_r = !std::isfinite(e[r].real()) || !std::isfinite(e[r].imag());
            if (inf_s && inf_r)
                throw std::invalid_argument("rho_basis: points must be pairwise distinct");
            if (!inf_s && !inf_r && std::abs(e[s] - e[r]) < 1e-14)
                throw std::invalid_argument("rho_basis: points must be pairwise distinct");
        }
        basis.push_back(rho_element(e[s]));
    }
    return basis;
}

namespace {

QuadDiff assemble_psi_e(const QuadDiff& psi0, const std::vector<QuadDiff>& basis,
                        const std::vector<cxd>& xi) {
    QuadDiff acc = psi0;
    for (std::size_t s = 0; s < basis.size(); ++s) acc = acc + basis[s].scaled(xi[s]);
    return acc;
}

}  // namespace

ExtremalSolution l1_distance_to_span(const QuadDiff& psi0,
                                     const std::vector<QuadDiff>& basis, double tol,
                                     int restarts, std::uint64_t seed) {
    for (const auto& b : basis)
        if (b.domain() != psi0.domain())
            throw std::invalid_argument("l1_distance_to_span: domain mismatch");
    if (psi0.domain() != PlanarDomain::Disk)
        throw std::invalid_argument("l1_distance_to_span: disk domain expected");

    QuadratureOptions qopt;
    qopt.tol = tol;

    ExtremalSolution sol;
    const int m = int(basis.size());
    if (m == 0) {
        sol.d_quadrature = l1_norm_report(psi0, qopt);
        sol.d = sol.d_quadrature.value.real();
        sol.psi_e = psi0;
        KktReport rep = kkt_check(sol, psi0, basis, std::max(tol, 1e-6));
        sol.kkt_residuals = rep.basis_residuals;
        sol.kkt_residuals.push_back(rep.value_residual);
        sol.kkt_ok = rep.pass;
        return sol;
    }

    std::vector<cxd> hints = psi0.poles();
    for (const auto& b : basis)
        for (const auto& p : b.poles()) hints.push_back(p);

    struct Discretization {
        Eigen::MatrixXcd A;
        Eigen::VectorXcd rhs;
        Eigen::VectorXd w;
    };
    auto discretize = [&](const std::function<cxd(cxd)>& weight_fn) {
        QuadratureOptions mesh_opt;
        mesh_opt.tol = std::min(tol, 1e-6) * 0.1;
        mesh_opt.max_cells = 60'000;
        QuadratureMesh mesh = build_disk_mesh(weight_fn, hints, mesh_opt);
        const std::size_t Q = mesh.nodes.size();
        Discretization d;
        d.A.resize(Q, m);
        d.rhs.resize(Q);
        d.w.resize(Q);
        for (std::size_t q = 0; q < Q; ++q) {
            d.rhs(q) = psi0.eval(mesh.nodes[q]);
            d.w(q) = mesh.weights[q];
            for (int s = 0; s < m; ++s) d.A(q, s) = basis[s].eval(mesh.nodes[q]);
        }
        return d;
    };

    auto objective = [](const Discretization& d, const Eigen::VectorXcd& zeta) {
        return (d.w.array() * (d.rhs - d.A * zeta).array().abs()).sum();
    };

    // IRLS for the weighted least-absolute-deviations problem
    auto irls = [&](const Discretization& d, Eigen::VectorXcd zeta) {
        const std::size_t Q = d.rhs.size();
        for (double eps = 1e-2; eps >= 1e-9 / 2; eps *= 0.1) {
            for (int it = 0; it < 40; ++it) {
                const Eigen::VectorXcd r = d.rhs - d.A * zeta;
                Eigen::VectorXd omega(Q);
                for (std::size_t q = 0; q < Q; ++q)
                    omega(q) = d.w(q) / std::sqrt(std::norm(r(q)) + eps * eps);
                const Eigen::MatrixXcd Aw = omega.asDiagonal() * d.A;
                const Eigen::MatrixXcd G = d.A.adjoint() * Aw;
                const Eigen::VectorXcd b = Aw.adjoint() * d.rhs;
                const Eigen::VectorXcd znew = G.ldlt().solve(b);
                const double change = (znew - zeta).norm();
                zeta = znew;
                if (change <= 1e-13 * (1.0 + zeta.norm())) break;
            }
        }
        return zeta;
    };

    auto base_weight = [&](cxd z) -> cxd {
        double w = std::abs(psi0.eval(z));
        for (const auto& b : basis) w += std::abs(b.eval(z));
        return w;
    };
    Discretization disc = discretize(base_weight);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    double best_obj = 0.0, worst_obj = 0.0;
    Eigen::VectorXcd best;
    const double scale =
        objective(disc, Eigen::VectorXcd::Zero(m)) / std::max(1e-300, double(m));
    for (int rs = 0; rs <= std::max(0, restarts); ++rs) {
        Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(m);
        if (rs > 0)
            for (int s = 0; s < m; ++s) z0(s) = scale * cxd(gauss(rng), gauss(rng));
        const Eigen::VectorXcd zeta = irls(disc, z0);
        const double obj = objective(disc, zeta);
        if (rs == 0 || obj < best_obj) {
            best_obj = obj;
            best = zeta;
        }
        worst_obj = rs == 0 ? obj : std::max(worst_obj, obj);
    }
    sol.restart_spread = worst_obj - best_obj;

    // second pass on a mesh adapted to the near-optimal combination, whose
    // zero set the first mesh cannot see
    {
        Eigen::VectorXcd zeta = best;
        auto refined_weight = [&](cxd z) -> cxd {
            cxd v = psi0.eval(z);
            for (int s = 0; s < m; ++s) v -= zeta(s) * basis[s].eval(z);
            return std::abs(v) + 0.05 * std::abs(base_weight(z));
        };
        Discretization disc2 = discretize(refined_weight);
        best = irls(disc2, best);
    }

    sol.xi.resize(m);
    for (int s = 0; s < m; ++s) sol.xi[s] = -best(s);
    sol.psi_e = assemble_psi_e(psi0, basis, sol.xi);
    sol.d_quadrature = l1_norm_report(sol.psi_e, qopt);
    sol.d = sol.d_quadrature.value.real();

    KktReport rep = kkt_check(sol, psi0, basis, std::max(tol, 1e-4));
    sol.kkt_residuals = rep.basis_residuals;
    sol.kkt_residuals.push_back(rep.value_residual);
    sol.kkt_ok = rep.pass;
    return sol;
}

KktReport kkt_check(const ExtremalSolution& sol, const QuadDiff& psi0,
                    const std::vector<QuadDiff>& basis, double tol) {
    KktReport rep;
    // a vanishing minimum leaves the unimodular factor undetermined: the
    // stationarity conditions are vacuous there
    const double psi0_scale = l1_norm(psi0, std::min(tol, 1e-6));
    if (sol.d <= tol * std::max(psi0_scale, 1e-12)) {
        rep.psi0_norm = psi0_scale;
        rep.basis_residuals.assign(basis.size(), 0.0);
        for (const auto& b : basis)
            rep.basis_norms.push_back(l1_norm(b, std::min(tol, 1e-6)));
        rep.value_residual = sol.d;
        rep.pass = true;
        return rep;
    }
    const QuadDiff& pe = sol.psi_e;
    auto sign_field = [&pe](cxd z) -> cxd {
        const cxd v = pe.eval(z);
        if (v == 0.0 || !std::isfinite(v.real()) || !std::isfinite(v.imag())) return 0.0;
        return std::abs(v) / v;
    };
    std::vector<cxd> hints = pe.poles();
    rep.pass = true;
    for (const auto& b : basis) {
        const double bn = l1_norm(b, std::min(tol, 1e-6));
        rep.basis_norms.push_back(bn);
        QuadratureOptions opt;
        opt.tol = 0.2 * tol * std::max(bn, 1e-12);
        std::vector<cxd> h = hints;
        for (const auto& p : b.poles()) h.push_back(p);
        auto f = [&](cxd z) -> cxd { return sign_field(z) * b.eval(z); };
        const QuadratureResult r = integrate_disk(f, h, opt);
        const double resid = std::abs(r.value);
        rep.basis_residuals.push_back(resid);
        if (!(resid < tol * std::max(bn, 1e-12))) rep.pass = false;
    }
    rep.psi0_norm = psi0_scale;
    {
        QuadratureOptions opt;
        opt.tol = 0.2 * tol * std::max(rep.psi0_norm, 1e-12);
        std::vector<cxd> h = hints;
        for (const auto& p : psi0.poles()) h.push_back(p);
        auto f = [&](cxd z) -> cxd { return sign_field(z) * psi0.eval(z); };
        const QuadratureResult r = integrate_disk(f, h, opt);
        rep.value_residual = std::abs(r.value - sol.d);
        if (!(rep.value_residual < tol * std::max(rep.psi0_norm, 1e-12))) rep.pass = false;
    }
    return rep;
}

std::pair<double, bool> coeff_bound(int n, double k) {
    if (n < 2) throw std::invalid_argument("coeff_bound: n must be >= 2");
    if (k < 0.0 || k >= 1.0) throw std::invalid_argument("coeff_bound: k must be in [0,1)");
    const double bound = 2.0 * k / double(n - 1);
    const bool admissible = n == 2 ? true : k <= 1.0 / (double(n) * n + 1.0);
    return {bound, admissible};
}

KnBracket kn_bracket(int n) {
    if (n < 3) throw std::invalid_argument("kn_bracket: n must be >= 3");
    KnBracket kb;
    kb.lower = 1.0 / (double(n) * n + 1.0);
    kb.upper = std::pow(2.0 / (double(n) * (n - 1.0)), 1.0 / double(n - 2));
    // crossing of 2k/(n-1) with n k^(n-1): bisection on k^(n-2) - 2/(n(n-1))
    const double target = 2.0 / (double(n) * (n - 1.0));
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::pow(mid, n - 2) - target >= 0.0 ? hi : lo) = mid;
    }
    kb.crossing_residual = std::abs(0.5 * (lo + hi) - kb.upper);
    const double k = kb.lower;
    kb.competitor_loses = 2.0 * k / double(n - 1) >= double(n) * std::pow(k, n - 1);
    return kb;
}

double k0_lower_bound(double jprime_norm, double M) {
    if (jprime_norm <= 0.0)
        throw std::invalid_argument("k0_lower_bound: the derivative norm must be positive");
    if (M < 0.0) throw std::invalid_argument("k0_lower_bound: M must be nonnegative");
    return jprime_norm / (jprime_norm + M + 1.0);
}

double min_dilatation_for_level(double r, double d) {
    if (d == 0.0) throw std::invalid_argument("min_dilatation_for_level: d must be nonzero");
    if (r < 0.0) throw std::invalid_argument("min_dilatation_for_level: r must be >= 0");
    return r / d;
}

SharpBoundReport sharp_bound_experiment(const FunctionalSpec& J, double k, int samples,
                                        const SharpBoundOptions& opt) {
    if (k <= 0.0 || k >= 1.0)
        throw std::invalid_argument("sharp_bound_experiment: k must be in (0,1)");
    const QuadDiff psi0 = functional_derivative(J);
    const double psi0_l1 = l1_norm(psi0, opt.tol);

    SharpBoundReport rep;
    rep.samples = samples;
    rep.bound = k / pi * psi0_l1;
    rep.slack = 1e-6 * rep.bound + 1e-12;

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    GridSpec g{opt.half_width, opt.grid_n};

    std::vector<cxd> best_mu;
    for (int s = 0; s < samples; ++s) {
        // random smooth bump-localized polynomial field, sup-normalized to k
        cxd c[4];
        for (auto& ci : c) ci = cxd(gauss(rng), gauss(rng));
        auto raw = [&](cxd z) -> cxd {
            const double b = 1.0 - std::norm(z);
            return b * b * (c[0] + c[1] * z + c[2] * std::conj(z) + c[3] * z * z);
        };
        std::vector<cxd> vals(std::size_t(g.n) * g.n, cxd(0.0));
        double sup = 0.0;
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const cxd zc = g.center(ix, iy);
                if (std::abs(zc) >= 1.0) continue;
                const cxd v = raw(zc);
                vals[g.index(ix, iy)] = v;
                sup = std::max(sup, std::abs(v));
            }
        if (sup == 0.0) continue;
        for (auto& v : vals) v *= k / sup;
        BeltramiField mu = BeltramiField::grid(g, std::move(vals));
        const double fov = std::abs(first_order_value(J, mu, opt.tol));
        if (fov > rep.max_value) {
            rep.max_value = fov;
            best_mu = mu.samples();
        }
        if (fov > rep.bound + rep.slack) ++rep.violations;
    }
    rep.empirical_c = std::max(0.0, rep.max_value - rep.bound) / (k * k);

    if (!best_mu.empty()) {
        // distance of the empirical maximizer to the phase family of the
        // Teichmueller-form field of psi0
        const double h = g.spacing(), area = h * h;
        double mm = 0.0, tt = 0.0;
        cxd cross = 0.0;
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const cxd zc = g.center(ix, iy);
                if (std::abs(zc) >= 1.0) continue;
                const cxd v = psi0.eval(zc);
                const cxd T = v == 0.0 ? cxd(0.0) : k * std::abs(v) / v;
                const cxd M = best_mu[g.index(ix, iy)];
                mm += std::norm(M) * area;
                tt += std::norm(T) * area;
                cross += M * std::conj(T) * area;
            }
        rep.maximizer_distance = std::sqrt(std::max(0.0, mm + tt - 2.0 * std::abs(cross)));
    }
    return rep;
}

}  // namespace teichlab
