#pragma once

#include "teichlab/laurent.hpp"
#include "teichlab/variation.hpp"

namespace teichlab {

struct SolverOptions {
    int max_iter = 200;
    double tol = 1e-12;  // sup-norm of the fixed-point increment
    Normalization normalization = Normalization::Hydrodynamic;
    int fit_modes = 16;       // deepest fitted inverse power
    double fit_radius = 2.0;  // circle used for the exterior fit
    int fit_samples = 256;
};

// Numerical solution of dbar f = mu df with hydrodynamic normalization:
// f = z + C[phi] where phi = dbar f solves phi = mu B[phi] + mu, B the
// Beurling transform realized as a Fourier multiplier on the padded grid.
struct BeltramiSolution {
    GridSpec grid;
    std::vector<cxd> phi;           // dbar f at cell centers
    std::vector<cxd> beurling_phi;  // B[phi] at cell centers; df = 1 + B[phi]
    double residual_sup = 0.0;      // |phi - mu(1 + B phi)| away from the support edge
    int iterations = 0;
    cxd shift = 0.0;  // constant subtracted to enforce f(1) = 1, when requested
    LaurentSeries exterior_fit = LaurentSeries::identity(SeriesDomain::Exterior);

    // f and its derivatives anywhere outside (or inside, approximately) the
    // support, through the Cauchy transform of phi.
    cxd map_value(cxd z) const;
    cxd map_jet(cxd z, int order) const;
    cxd cauchy_transform(cxd z) const;
};

// mu must be a grid field with support inside the central quarter of the box
// (padding factor >= 4 for the periodized transform).
BeltramiSolution solve_beltrami(const BeltramiField& mu, const SolverOptions& opt = {});

// J(f^mu) - J(id) for a point-evaluation functional, reading the jets off
// the solved map.
cxd evaluate_functional(const FunctionalSpec& J, const BeltramiSolution& sol);

// Samples a closed-form coefficient onto a solver grid, zeroing outside the
// unit disk.
BeltramiField sample_disk_field(const std::function<cxd(cxd)>& mu_fn, double half_width,
                                int n);

}  // namespace teichlab
