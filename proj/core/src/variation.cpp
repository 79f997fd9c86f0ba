#include "teichlab/variation.hpp"

#include <cmath>

namespace teichlab {

FunctionalSpec::FunctionalSpec(std::vector<FunctionalTerm> terms, Normalization norm)
    : terms_(std::move(terms)), norm_(norm) {
    bool nonzero = false;
    for (const auto& t : terms_) {
        if (t.order < 0) throw std::invalid_argument("functional_spec: negative order");
        const double r = std::abs(t.point);
        if (t.order > 0 && r <= 1.0)
            throw std::invalid_argument(
                "functional_spec: derivative terms require points in the conformality domain");
        if (t.order == 0 && r == 1.0 && std::abs(t.point - 1.0) < 1e-14 &&
            norm_ == Normalization::FixPointOne)
            throw std::invalid_argument("functional_spec: f(1) is pinned by the normalization");
        if (t.weight != 0.0) nonzero = true;
    }
    if (!nonzero)
        throw std::invalid_argument("functional_spec: all weights vanish");
}

FunctionalSpec FunctionalSpec::coefficient(int n, int points, double radius) {
    if (n < 0) throw std::invalid_argument("functional_spec: coefficient index must be >= 0");
    if (radius <= 1.0) throw std::invalid_argument("functional_spec: radius must exceed 1");
    if (points < n + 2) points = n + 2;
    std::vector<FunctionalTerm> ts(points);
    for (int q = 0; q < points; ++q) {
        const cxd z = std::polar(radius, 2.0 * pi * q / points);
        ts[q].point = z;
        ts[q].order = 0;
        ts[q].weight = pow_int(z, n) / double(points);
    }
    return FunctionalSpec(std::move(ts), Normalization::Hydrodynamic);
}

cxd FunctionalSpec::evaluate(const std::function<cxd(cxd, int)>& jet) const {
    cxd s = 0.0;
    for (const auto& t : terms_) {
        cxd id_jet = 0.0;
        if (t.order == 0) id_jet = t.point;
        if (t.order == 1) id_jet = 1.0;
        s += t.weight * (jet(t.point, t.order) - id_jet);
    }
    return s;
}

QuadDiff functional_derivative(const FunctionalSpec& J) {
    std::vector<QuadDiffTerm> ts;
    const bool fix1 = J.normalization() == Normalization::FixPointOne;
    for (const auto& t : J.terms()) {
        if (t.weight == 0.0) continue;
        if (t.order == 0) {
            QuadDiffTerm q;
            q.kind = fix1 ? QuadDiffTerm::Kind::Rho : QuadDiffTerm::Kind::SimplePole;
            q.c = t.weight;
            q.e = t.point;
            ts.push_back(q);
        } else {
            double factorial = 1.0;
            for (int s = 2; s <= t.order; ++s) factorial *= double(s);
            QuadDiffTerm q;
            q.kind = QuadDiffTerm::Kind::HigherPole;
            q.c = t.weight * factorial;
            q.e = t.point;
            q.order = t.order + 1;
            ts.push_back(q);
        }
    }
    return QuadDiff(PlanarDomain::Disk, std::move(ts));
}

namespace {

void check_point_outside_support(const BeltramiField& mu, cxd z) {
    if (mu.is_grid()) {
        if (mu.value(z) != 0.0)
            throw std::invalid_argument("first_order_map: z lies inside the support of mu");
        return;
    }
    if (std::abs(z) < 1.0 - 1e-12)
        throw std::invalid_argument("first_order_map: z lies inside the support of mu");
}

}  // namespace

cxd first_order_map(const BeltramiField& mu, cxd z, Normalization norm, double tol) {
    check_point_outside_support(mu, z);
    const bool fix1 = norm == Normalization::FixPointOne;
    auto kernel = [&](cxd zeta) -> cxd {
        cxd k = 1.0 / (zeta - z);
        if (fix1) k -= 1.0 / (zeta - 1.0);
        return k;
    };
    cxd integral;
    if (mu.is_grid()) {
        const GridSpec& g = mu.grid_spec();
        const double w = g.spacing() * g.spacing();
        cxd s = 0.0;
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const cxd m = mu.samples()[g.index(ix, iy)];
                if (m == 0.0) continue;
                s += m * kernel(g.center(ix, iy)) * w;
            }
        integral = s;
    } else {
        QuadratureOptions opt;
        opt.tol = tol;
        auto f = [&](cxd zeta) -> cxd { return mu.value(zeta) * kernel(zeta); };
        std::vector<cxd> hints = mu.form().poles();
        hints.push_back(z);
        if (fix1) hints.push_back(1.0);
        QuadratureResult r = integrate_disk(f, hints, opt);
        if (!r.converged)
            throw convergence_error("first_order_map: quadrature did not converge");
        integral = r.value;
    }
    return z - integral / pi;
}

cxd first_order_value(const FunctionalSpec& J, const BeltramiField& mu, double tol) {
    const QuadDiff psi0 = functional_derivative(J);
    return -pairing(mu, psi0, tol) / pi;
}

double l1_directional_derivative(const QuadDiff& phi, const QuadDiff& psi, double tol) {
    if (phi.is_zero())
        throw std::invalid_argument("l1_directional_derivative: phi is identically zero");
    if (phi.domain() != psi.domain())
        throw std::invalid_argument("l1_directional_derivative: domain mismatch");
    auto f = [&](cxd z) -> cxd {
        const cxd w = phi.eval(z);
        if (w == 0.0) return 0.0;
        return psi.eval(z) * std::abs(w) / w;
    };
    std::vector<cxd> hints = phi.poles();
    const auto& pp = psi.poles();
    hints.insert(hints.end(), pp.begin(), pp.end());
    QuadratureOptions opt;
    opt.tol = tol;
    QuadratureResult r = integrate_domain(phi.domain(), f, hints, opt);
    if (!r.converged)
        throw convergence_error("l1_directional_derivative: quadrature did not converge");
    return r.value.real();
}

}  // namespace teichlab
