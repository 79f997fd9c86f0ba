#pragma once

#include <functional>
#include <vector>

#include "teichlab/quad_diff.hpp"

namespace teichlab {

struct QuadratureOptions {
    double tol = 1e-8;
    long max_cells = 400'000;
    int initial_radial = 8;
    int initial_angular = 16;
};

struct QuadratureResult {
    cxd value = 0.0;
    double error_estimate = 0.0;
    long cells = 0;
    long evals = 0;
    bool converged = false;
};

// Adaptive quadrature of f over the unit disk against Lebesgue measure,
// evaluated in polar cells with the r dr dtheta weight and dyadic subdivision
// driven by a per-cell two-rule error estimate.  refine_points seed extra
// subdivision (pole locations).
QuadratureResult integrate_disk(const std::function<cxd(cxd)>& f,
                                const std::vector<cxd>& refine_points,
                                const QuadratureOptions& opt);

// Same over |z| > 1, via inversion onto the unit disk.
QuadratureResult integrate_exterior(const std::function<cxd(cxd)>& f,
                                    const std::vector<cxd>& refine_points,
                                    const QuadratureOptions& opt);

QuadratureResult integrate_domain(PlanarDomain d, const std::function<cxd(cxd)>& f,
                                  const std::vector<cxd>& refine_points,
                                  const QuadratureOptions& opt);

// Fixed mesh exported from an adaptive run: nodes and positive weights such
// that  integral g  ~=  sum_q w_q g(z_q)  for integrands sharing the
// refinement structure of the weight function the mesh was built from.
struct QuadratureMesh {
    std::vector<cxd> nodes;
    std::vector<double> weights;
};
QuadratureMesh build_disk_mesh(const std::function<cxd(cxd)>& weight_fn,
                               const std::vector<cxd>& refine_points,
                               const QuadratureOptions& opt);

// L1 norm of a quadratic differential over its domain.
QuadratureResult l1_norm_report(const QuadDiff& psi, const QuadratureOptions& opt);
// Throws convergence_error when the tolerance cannot be met within budget.
double l1_norm(const QuadDiff& psi, double tol);

// The pairing integral of mu against psi over psi's domain.  Grid fields use
// the grid's own midpoint rule (the cells are the integration elements);
// closed-form fields go through the adaptive engine.
QuadratureResult pairing_report(const BeltramiField& mu, const QuadDiff& psi,
                                const QuadratureOptions& opt);
cxd pairing(const BeltramiField& mu, const QuadDiff& psi, double tol);

// Moments  integral of mu(z) z^p  over the unit disk for p = 0..pmax.
std::vector<cxd> disk_moments(const BeltramiField& mu, int pmax, double tol);

// Lower estimate of sup{ |<mu, psi>| : psi a squared-polynomial differential
// of unit L1 norm } by projected gradient ascent over coefficient vectors
// with support <= basis_size, with random restarts.  Monotone in basis_size.
double alpha_D(const BeltramiField& mu, int basis_size, int restarts,
               std::uint64_t seed = 0x517cc1b727220a95ull, double tol = 1e-8);

}  // namespace teichlab
