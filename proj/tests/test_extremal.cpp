#include <doctest.h>

#include <random>
#include <teichlab/extremal.hpp>

using namespace teichlab;

namespace {

QuadDiff random_polynomial(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> g;
    std::vector<QuadDiffTerm> ts;
    for (int p = 0; p <= degree; ++p) {
        QuadDiffTerm t;
        t.kind = QuadDiffTerm::Kind::Monomial;
        t.c = cxd(g(rng), g(rng));
        t.p = p;
        ts.push_back(t);
    }
    return QuadDiff(PlanarDomain::Disk, ts);
}

double objective(const QuadDiff& psi0, const std::vector<QuadDiff>& basis,
                 const std::vector<cxd>& zeta, double tol) {
    QuadDiff acc = psi0;
    for (std::size_t s = 0; s < basis.size(); ++s)
        acc = acc + basis[s].scaled(-zeta[s]);
    return l1_norm(acc, tol);
}

}  // namespace

TEST_CASE("rho kernels") {
    auto r2 = rho_element(cxd(2.0, 0.0));
    CHECK(std::abs(r2.eval(cxd(0.0)) - 0.5) < 1e-15);

    auto rinf = rho_element(cxd(std::numeric_limits<double>::infinity(), 0.0));
    for (cxd z : {cxd(0.3, 0.2), cxd(-0.4, 0.5)})
        CHECK(std::abs(rinf.eval(z) + 1.0 / (z - 1.0)) < 1e-15);

    // partial fractions: rho_e = 1/(z-e) - 1/(z-1)
    const cxd e(1.7, -2.2);
    auto re = rho_element(e);
    for (cxd z : {cxd(0.1, 0.6), cxd(-0.8, 0.05)})
        CHECK(std::abs(re.eval(z) - (1.0 / (z - e) - 1.0 / (z - 1.0))) < 1e-14);

    CHECK_THROWS_AS(rho_basis({cxd(1.0, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(rho_basis({cxd(2.0, 0.0), cxd(2.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("distance to the span: membership and empty basis") {
    auto basis = rho_basis({cxd(2.0, 0.0), cxd(0.0, -2.0)});
    QuadDiff psi0 = basis[0].scaled(cxd(2.0, 0.0)) + basis[1].scaled(cxd(-0.7, 0.3));
    auto sol = l1_distance_to_span(psi0, basis, 1e-6, 3);
    CHECK(sol.d < 1e-5);
    CHECK(std::abs(sol.xi[0] + cxd(2.0, 0.0)) < 1e-4);
    CHECK(std::abs(sol.xi[1] + cxd(-0.7, 0.3)) < 1e-4);

    auto sole = l1_distance_to_span(psi0, {}, 1e-7, 0);
    CHECK(std::abs(sole.d - l1_norm(psi0, 1e-8)) < 1e-6);
    CHECK(sole.kkt_ok);
}

TEST_CASE("rotational symmetry kills the linear term") {
    auto psi0 = QuadDiff::monomial(PlanarDomain::Disk, 1.0, 0);
    std::vector<QuadDiff> basis = {QuadDiff::monomial(PlanarDomain::Disk, 1.0, 1)};
    auto sol = l1_distance_to_span(psi0, basis, 1e-7, 3);
    CHECK(std::abs(sol.d - pi) < 1e-6);
    CHECK(std::abs(sol.xi[0]) < 1e-5);
    CHECK(sol.kkt_ok);

    // coarse grid scan confirms the minimizer
    for (double re : {-0.4, -0.2, 0.2, 0.4})
        for (double im : {-0.4, 0.0, 0.4}) {
            const double away = objective(psi0, basis, {cxd(re, im)}, 1e-5);
            CHECK(sol.d <= away + 1e-4);
        }
}

TEST_CASE("stationarity conditions at the solved minimum") {
    std::mt19937_64 rng(83);
    auto basis = rho_basis({std::polar(2.0, 0.6), std::polar(2.0, 2.9)});
    auto psi0 = random_polynomial(rng, 3);
    auto sol = l1_distance_to_span(psi0, basis, 1e-6, 4);
    CHECK(sol.kkt_ok);

    auto rep1 = kkt_check(sol, psi0, basis, 1e-3);
    auto rep2 = kkt_check(sol, psi0, basis, 1e-4);
    CHECK(rep2.pass);
    for (std::size_t s = 0; s < rep1.basis_residuals.size(); ++s)
        CHECK(rep2.basis_residuals[s] <= rep1.basis_residuals[s] + 1e-10);

    // the objective is convex along segments
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<cxd> za = {cxd(g(rng), g(rng)), cxd(g(rng), g(rng))};
        std::vector<cxd> zb = {cxd(g(rng), g(rng)), cxd(g(rng), g(rng))};
        std::vector<cxd> mid = {0.5 * (za[0] + zb[0]), 0.5 * (za[1] + zb[1])};
        const double fa = objective(psi0, basis, za, 1e-6);
        const double fb = objective(psi0, basis, zb, 1e-6);
        const double fm = objective(psi0, basis, mid, 1e-6);
        CHECK(fm <= 0.5 * (fa + fb) + 1e-6);
    }
}

TEST_CASE("coefficient bounds") {
    auto [b3, a3] = coeff_bound(3, 0.1);
    CHECK(b3 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(a3);
    auto [b0, a0] = coeff_bound(5, 0.0);
    CHECK(b0 == 0.0);
    CHECK(a0);
    auto [b2, a2] = coeff_bound(2, 0.4);
    CHECK(b2 == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(a2);
    CHECK_THROWS_AS(coeff_bound(1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(coeff_bound(3, 1.0), std::invalid_argument);
}

TEST_CASE("admissibility brackets") {
    auto k3 = kn_bracket(3);
    CHECK(k3.lower == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(k3.upper == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    auto k4 = kn_bracket(4);
    CHECK(k4.lower == doctest::Approx(1.0 / 17.0).epsilon(1e-14));
    CHECK(k4.upper == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-14));
    for (int n = 3; n <= 8; ++n) {
        auto kb = kn_bracket(n);
        CHECK(kb.crossing_residual <= 1e-10);
        CHECK(kb.competitor_loses);
        CHECK(kb.lower < kb.upper);
    }
    CHECK_THROWS_AS(kn_bracket(2), std::invalid_argument);
}

TEST_CASE("validity radius and level dilatation") {
    CHECK(k0_lower_bound(1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // the residue functional has derivative norm ||psi0||_1/pi = 1, and the
    // area theorem caps |b1| at 1, so the quadrature pipeline lands on 1/3
    auto psi0 = functional_derivative(FunctionalSpec::coefficient(1));
    const double jnorm = l1_norm(psi0, 1e-9) / pi;
    CHECK(std::abs(jnorm - 1.0) < 1e-8);
    CHECK(std::abs(k0_lower_bound(jnorm, 1.0) - 1.0 / 3.0) < 1e-8);
    double prev = 0.0;
    for (double j : {1.0, 10.0, 100.0, 1e4, 1e8}) {
        const double v = k0_lower_bound(j, 0.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.99);
    CHECK_THROWS_AS(k0_lower_bound(0.0, 1.0), std::invalid_argument);

    CHECK(min_dilatation_for_level(0.05, 1.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(min_dilatation_for_level(0.0, 2.0) == 0.0);
    CHECK_THROWS_AS(min_dilatation_for_level(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("level dilatation composes with the span distance") {
    std::mt19937_64 rng(89);
    auto basis = rho_basis({std::polar(2.0, 1.2)});
    auto psi0 = random_polynomial(rng, 2);
    auto s1 = l1_distance_to_span(psi0, basis, 1e-6, 3, 1);
    auto s2 = l1_distance_to_span(psi0, basis, 1e-6, 3, 2);
    CHECK(std::abs(s1.d - s2.d) < 1e-6);
    const double r = 0.01;
    CHECK(std::abs(min_dilatation_for_level(r, s1.d) -
                   min_dilatation_for_level(r, s2.d)) < 1e-6);
}

TEST_CASE("sharp bound scan stays below the Teichmueller maximum") {
    auto J = FunctionalSpec::coefficient(1);
    SharpBoundOptions opt;
    opt.grid_n = 96;
    auto rep = sharp_bound_experiment(J, 0.02, 60, opt);
    CHECK(rep.samples == 60);
    CHECK(rep.violations == 0);
    CHECK(rep.max_value <= rep.bound + rep.slack);
    CHECK(rep.bound == doctest::Approx(0.02).epsilon(1e-6));
}

TEST_CASE("a field paired to zero sits far below the bound") {
    auto J = FunctionalSpec::coefficient(1);
    // phase field e^{i arg z} integrates to zero against the constant
    GridSpec g{1.0, 96};
    std::vector<cxd> samples(96 * 96, cxd(0.0));
    for (int iy = 0; iy < 96; ++iy)
        for (int ix = 0; ix < 96; ++ix) {
            const cxd z = g.center(ix, iy);
            if (std::abs(z) < 1.0 && z != 0.0)
                samples[g.index(ix, iy)] = 0.02 * z / std::abs(z);
        }
    auto mu = BeltramiField::grid(g, samples);
    CHECK(std::abs(first_order_value(J, mu)) < 1e-4);
}

TEST_CASE("first-order coefficient competitors on the exterior domain") {
    // |a_n| at first order is (1/pi)|<mu, z^{-n-1}>| over the exterior; the
    // Teichmueller form of z^{-n-1} attains 2k/(n-1)
    std::mt19937_64 rng(97);
    std::normal_distribution<double> g;
    for (int n = 3; n <= 6; ++n) {
        const double k = 1.0 / (double(n) * n + 1.0);
        auto psi_n = QuadDiff::monomial(PlanarDomain::Exterior, 1.0, -n - 1);
        const double bound = coeff_bound(n, k).first;

        auto mu_star = teich_beltrami(psi_n, k);
        const double attained = std::abs(pairing(mu_star, psi_n, 1e-8)) / pi;
        CHECK(std::abs(attained - bound) < 1e-6);

        for (int trial = 0; trial < 5; ++trial) {
            std::vector<QuadDiffTerm> ts;
            for (int p = -n - 2; p <= -3; ++p) {
                QuadDiffTerm t;
                t.kind = QuadDiffTerm::Kind::Monomial;
                t.c = cxd(g(rng), g(rng));
                t.p = p;
                ts.push_back(t);
            }
            auto mu = teich_beltrami(QuadDiff(PlanarDomain::Exterior, ts), k);
            const double value = std::abs(pairing(mu, psi_n, 1e-8)) / pi;
            CHECK(value <= bound + 1e-6);
        }
    }
}
