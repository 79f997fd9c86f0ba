// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not tuned at run time.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include <teichlab/beltrami_solver.hpp>
#include <teichlab/extremal.hpp>
#include <teichlab/families.hpp>
#include <teichlab/grunsky.hpp>
#include <teichlab/metrics.hpp>
#include <teichlab/quadrature.hpp>
#include <teichlab/schwarzian.hpp>
#include <teichlab/variation.hpp>

using namespace teichlab;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const char* name, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---- 1: Grunsky diagonal family ----------------------------------------

void criterion_1() {
    const auto t0 = clock_type::now();
    double max_offdiag = 0.0, max_diag_err = 0.0, max_norm_err = 0.0;
    for (double b : {0.3, 0.5, 0.7}) {
        auto B = grunsky_coefficients(b1_map(b), 32);
        for (int m = 1; m <= 32; ++m)
            for (int n = 1; n <= 32; ++n) {
                if (m == n)
                    max_diag_err = std::max(
                        max_diag_err,
                        std::abs(B.alpha(m, m) - std::pow(b, m) / double(m)));
                else
                    max_offdiag = std::max(max_offdiag, std::abs(B.beta(m, n)));
            }
        max_norm_err =
            std::max(max_norm_err, std::abs(grunsky_norm(B).value - b));
    }
    const double dt = seconds_since(t0);
    const bool pass = max_offdiag < 1e-12 && max_diag_err < 1e-12 &&
                      max_norm_err < 1e-8 && dt < 5.0;
    report(1, pass, "Grunsky diagonal family",
           fmt("offdiag %.2e, diag err %.2e, norm err %.2e, %.2f s", max_offdiag,
               max_diag_err, max_norm_err, dt));
}

// ---- 2: equality case of the coefficient bound --------------------------

void criterion_2() {
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n) {
        for (int j = 0; j < 8; ++j) {
            const cxd t = std::polar(0.1, 2.0 * pi * j / 8.0);
            auto f = koebe_qc(t, n - 1, n + 4);
            worst = std::max(worst,
                             std::abs(f.coeff(n) - 2.0 * t / double(n - 1)));
        }
    }
    report(2, worst < 1e-12, "extremal family coefficient",
           fmt("max residual %.2e", worst));
}

// ---- 3: admissibility bracket -------------------------------------------

void criterion_3() {
    double worst = 0.0;
    bool loses = true;
    for (int n = 3; n <= 8; ++n) {
        auto kb = kn_bracket(n);
        worst = std::max(worst, kb.crossing_residual);
        loses = loses && kb.competitor_loses;
    }
    report(3, worst < 1e-10 && loses, "bracket for the admissible dilatation",
           fmt("max crossing residual %.2e, competitor loses: %s", worst,
               loses ? "yes" : "no"));
}

// ---- 4: Beltrami solver exactness ---------------------------------------

void criterion_4() {
    const auto t0 = clock_type::now();
    double max_sample_err = 0.0, max_b1_err = 0.0;
    for (double c : {0.05, 0.1}) {
        auto mu = sample_disk_field([c](cxd) { return cxd(c); }, 4.0, 512);
        auto sol = solve_beltrami(mu);
        for (int q = 0; q < 64; ++q) {
            const cxd z = std::polar(2.0, 2.0 * pi * q / 64.0);
            max_sample_err =
                std::max(max_sample_err, std::abs(sol.map_value(z) - (z + c / z)));
        }
        max_b1_err = std::max(max_b1_err, std::abs(sol.exterior_fit.coeff(-1) - c));
    }
    const double dt = seconds_since(t0);
    const bool pass = max_sample_err < 5e-3 && max_b1_err < 1e-3 && dt < 60.0;
    report(4, pass, "Beltrami solver against the affine solution",
           fmt("sample err %.2e, residue err %.2e, %.1f s", max_sample_err, max_b1_err,
               dt));
}

// ---- 5: first-order accuracy --------------------------------------------

void criterion_5() {
    auto J = FunctionalSpec::coefficient(1);
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    double min_slope = 10.0, max_slope = 0.0;
    for (int s = 0; s < 5; ++s) {
        cxd c0(g(rng), g(rng)), c1(g(rng), g(rng)), c2(g(rng), g(rng));
        auto base = [&](cxd z) {
            const double b = 1.0 - std::norm(z);
            return b * b * (c0 + c1 * z + c2 * std::conj(z));
        };
        std::vector<double> eps = {0.02, 0.01, 0.005}, errs;
        for (double e : eps) {
            auto mu = sample_disk_field([&](cxd z) { return e * base(z); }, 4.0, 256);
            auto sol = solve_beltrami(mu);
            errs.push_back(
                std::abs(evaluate_functional(J, sol) - first_order_value(J, mu, 1e-9)));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const double x = std::log(eps[i]), y = std::log(std::max(errs[i], 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = double(eps.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        min_slope = std::min(min_slope, slope);
        max_slope = std::max(max_slope, slope);
    }
    const bool pass = min_slope > 1.7 && max_slope < 2.3;
    report(5, pass, "first-order variation accuracy",
           fmt("log-log slopes in [%.3f, %.3f]", min_slope, max_slope));
}

// ---- 6: norm-derivative formula ------------------------------------------

void criterion_6() {
    std::mt19937_64 rng(4096);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<QuadDiffTerm> pt, qt;
        auto mono = [](cxd c, int p) {
            QuadDiffTerm t;
            t.kind = QuadDiffTerm::Kind::Monomial;
            t.c = c;
            t.p = p;
            return t;
        };
        pt.push_back(mono(cxd(2.0 + 0.3 * g(rng), 0.3 * g(rng)), 0));
        for (int p = 1; p <= 3; ++p) pt.push_back(mono(cxd(g(rng), g(rng)), p));
        if (trial % 2 == 0) pt.push_back(mono(0.4 * cxd(g(rng), g(rng)), -1));
        qt.push_back(mono(cxd(g(rng), g(rng)), 0));
        for (int p = 1; p <= 3; ++p) qt.push_back(mono(cxd(g(rng), g(rng)), p));
        QuadDiff phi(PlanarDomain::Disk, pt), psi(PlanarDomain::Disk, qt);

        const double lhs = l1_directional_derivative(phi, psi, 1e-8);
        const double delta = 1e-4;
        const double hp = l1_norm(phi + psi.scaled(delta), 1e-10);
        const double hm = l1_norm(phi + psi.scaled(-delta), 1e-10);
        worst = std::max(worst, std::abs(lhs - (hp - hm) / (2.0 * delta)));
    }
    report(6, worst < 1e-5, "directional derivative of the L1 norm",
           fmt("max mismatch %.2e over 20 pairs", worst));
}

// ---- 7: stationarity of the span distance --------------------------------

void criterion_7() {
    std::mt19937_64 rng(777);
    std::normal_distribution<double> g;
    bool pass = true;
    double worst_rel = 0.0, worst_spread = 0.0;
    for (int inst = 0; inst < 10; ++inst) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
        const double a1 = angle(rng), a2 = angle(rng);
        std::vector<cxd> pts = {std::polar(2.0, a1), std::polar(2.0, a2)};
        if (std::abs(pts[0] - pts[1]) < 0.2) pts[1] = -pts[0];
        auto basis = rho_basis(pts);
        std::vector<QuadDiffTerm> ts;
        for (int p = 0; p <= 3; ++p) {
            QuadDiffTerm t;
            t.kind = QuadDiffTerm::Kind::Monomial;
            t.c = cxd(g(rng), g(rng));
            t.p = p;
            ts.push_back(t);
        }
        QuadDiff psi0(PlanarDomain::Disk, ts);
        auto sol = l1_distance_to_span(psi0, basis, 1e-6, 4, 1000 + inst);
        auto rep = kkt_check(sol, psi0, basis, 1e-4);
        for (std::size_t s = 0; s < rep.basis_residuals.size(); ++s)
            worst_rel = std::max(worst_rel,
                                 rep.basis_residuals[s] / (1e-4 * rep.basis_norms[s]));
        worst_rel = std::max(worst_rel, rep.value_residual / (1e-4 * rep.psi0_norm));
        pass = pass && rep.pass;
        worst_spread = std::max(worst_spread, sol.restart_spread);
    }
    pass = pass && worst_spread < 1e-4;
    report(7, pass, "stationarity of the minimal distance",
           fmt("worst residual %.3f of tolerance, restart spread %.2e", worst_rel,
               worst_spread));
}

// ---- 8: metric coincidence along the diagonal family ---------------------

void criterion_8() {
    auto f = b1_map(0.6);
    std::vector<cxd> grid;
    for (int i = 1; i <= 18; ++i) grid.push_back(cxd(0.05 * i, 0.0));
    auto rows = geodesic_coincidence_experiment(
        f, [](cxd t) { return 0.6 * std::norm(t); }, grid, 32);
    double max_gap = 0.0;
    for (const auto& r : rows) max_gap = std::max(max_gap, std::abs(r.gap));
    report(8, max_gap < 1e-6, "lower and upper metric bounds coincide",
           fmt("max gap %.2e over |t| <= 0.9", max_gap));
}

// ---- 9: curvature residuals ----------------------------------------------

void criterion_9() {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    auto hyper = [](cxd t) { return 1.0 / (1.0 - std::norm(t)); };
    double worst = 0.0;
    std::vector<std::function<double(cxd)>> densities = {hyper};
    for (int i = 0; i < 5; ++i) {
        const cxd a(0.5 * u(rng), 0.5 * u(rng));
        const double theta = 3.0 * u(rng);
        auto h = [a, theta](cxd z) {
            return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
        };
        auto dh = [a, theta](cxd z) {
            const cxd den = 1.0 - std::conj(a) * z;
            return std::polar(1.0, theta) * (1.0 - std::norm(a)) / (den * den);
        };
        densities.push_back([h, dh](cxd t) {
            return std::abs(dh(t)) / (1.0 - std::norm(h(t)));
        });
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& lambda : densities)
        for (int p = 0; p < 100; ++p) {
            // interior samples at radius <= 0.5, clear of the stencil blowup
            // toward the rim
            const cxd t0 = std::polar(0.5 * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
            worst = std::max(worst, std::abs(curvature_check(lambda, t0, 1e-3)));
        }
    report(9, worst < 1e-4, "curvature of pulled-back densities",
           fmt("max |laplacian log density - 4 density^2| = %.2e", worst));
}

// ---- 10: univalence and the area-theorem bound ----------------------------

void criterion_10() {
    std::vector<LaurentSeries> catalog = {
        LaurentSeries::identity(SeriesDomain::Exterior),
        b1_map(0.3),
        b1_map(0.5),
        b1_map(0.7),
        b1_map(cxd(0.0, 0.6)),
        bm_map(0.3, 2),
        bm_map(0.2, 3),
        sigma_from_s(koebe_qc(0.3, 1, 80)),
        sigma_from_s(koebe_qc(0.2, 2, 80)),
        sigma_from_s(koebe_qc(0.2, 3, 80)),
        sqrt_transform(b1_map(0.5), cxd(-0.4, 0.0)),
        homotopy(b1_map(0.7), cxd(0.5, 0.2)),
    };
    std::mt19937_64 rng(6283);
    std::normal_distribution<double> g;
    double max_norm = 0.0, max_form = 0.0;
    for (const auto& f : catalog) {
        auto B = grunsky_coefficients(f, 16);
        max_norm = std::max(max_norm, grunsky_norm(B).value);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<cxd> x(16);
            double n2 = 0.0;
            for (auto& v : x) {
                v = cxd(g(rng), g(rng));
                n2 += std::norm(v);
            }
            const double inv = 1.0 / std::sqrt(n2);
            for (auto& v : x) v *= inv;
            max_form = std::max(max_form, std::abs(h_x_value(B, x)));
        }
    }
    const bool pass = max_norm <= 1.0 + 1e-8 && max_form <= 1.0 + 1e-10;
    report(10, pass, "univalence bound and bilinear-form bound",
           fmt("max norm %.9f, max |x^T B x| %.9f", max_norm, max_form));
}

}  // namespace

int main() {
    const auto t0 = clock_type::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failures,
                seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
