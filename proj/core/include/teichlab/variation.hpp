#pragma once

#include <functional>

#include "teichlab/quadrature.hpp"

namespace teichlab {

// Map normalization for the variational formulas: hydrodynamic alone
// (f(z) = z + O(1) at infinity), or hydrodynamic plus f(1) = 1.
enum class Normalization { Hydrodynamic, FixPointOne };

// One jet term of a point-evaluation distortion functional: the weight
// multiplies f^(order)(point).  Points of positive order must lie in the
// conformality domain |z| > 1; an interior point (|z| < 1) may carry only
// order 0.
struct FunctionalTerm {
    cxd point = 0.0;
    int order = 0;
    cxd weight = 0.0;
};

class FunctionalSpec {
  public:
    FunctionalSpec(std::vector<FunctionalTerm> terms, Normalization norm);

    // Laurent coefficient b_n encoded through its contour integral as point
    // evaluations on the circle |z| = radius (exact for trapezoid degree).
    static FunctionalSpec coefficient(int n, int points = 64, double radius = 2.0);

    // J(f) - J(id) evaluated against a jet oracle jet(z, s) = f^(s)(z).
    cxd evaluate(const std::function<cxd(cxd, int)>& jet) const;

    const std::vector<FunctionalTerm>& terms() const { return terms_; }
    Normalization normalization() const { return norm_; }

  private:
    std::vector<FunctionalTerm> terms_;
    Normalization norm_;
};

// The functional derivative at the identity: the rational quadratic
// differential whose pairing against mu gives the first-order change of J.
QuadDiff functional_derivative(const FunctionalSpec& J);

// First-order image of z under the map with Beltrami coefficient mu:
// z - (1/pi) * integral of mu(zeta) K(zeta) over the support, with
// K = 1/(zeta-z) alone (hydrodynamic) or 1/(zeta-z) - 1/(zeta-1).
// z must lie outside the support of mu.
cxd first_order_map(const BeltramiField& mu, cxd z, Normalization norm,
                    double tol = 1e-8);

// -(1/pi) <mu, psi_0> with psi_0 = functional_derivative(J); first-order
// value of J(f^mu) - J(id).
cxd first_order_value(const FunctionalSpec& J, const BeltramiField& mu,
                      double tol = 1e-8);

// d/dt of the L1 norm of phi + t psi at t = 0:
// Re integral of psi(z) |phi(z)|/phi(z).
double l1_directional_derivative(const QuadDiff& phi, const QuadDiff& psi,
                                 double tol = 1e-8);

}  // namespace teichlab
