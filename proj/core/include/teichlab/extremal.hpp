#pragma once

#include <cstdint>

#include "teichlab/variation.hpp"

namespace teichlab {

// Basis kernels (e_s - 1)/((z-1)(z-e_s)) for a list of pairwise distinct
// points; a non-finite entry stands for the point at infinity and yields
// -1/(z-1).  e_s = 1 is rejected.
std::vector<QuadDiff> rho_basis(const std::vector<cxd>& e);

struct ExtremalSolution {
    double d = 0.0;                     // minimal L1 distance
    std::vector<cxd> xi;                // coefficients of psi_e = psi0 + sum xi_s rho_s
    QuadDiff psi_e;                     // extremal differential
    std::vector<double> kkt_residuals;  // per-basis orthogonality residuals + value residual
    bool kkt_ok = false;
    double restart_spread = 0.0;  // max difference of d across restarts
    QuadratureResult d_quadrature;

    ExtremalSolution() : psi_e(QuadDiff::zero(PlanarDomain::Disk)) {}
};

// Minimizes || psi0 - span(basis) ||_1 over the disk: quadrature
// discretization into a weighted complex least-absolute-deviations problem,
// IRLS with a smoothing schedule driven to zero, multi-start.
ExtremalSolution l1_distance_to_span(const QuadDiff& psi0,
                                     const std::vector<QuadDiff>& basis, double tol,
                                     int restarts, std::uint64_t seed = 0x243f6a8885a308d3ull);

struct KktReport {
    std::vector<double> basis_residuals;  // |<|psi_e|/psi_e, rho_s>|
    double value_residual = 0.0;          // |<|psi_e|/psi_e, psi0> - d|
    std::vector<double> basis_norms;
    double psi0_norm = 0.0;
    bool pass = false;
};

// Verifies the stationarity conditions of the solved minimum by independent
// adaptive quadrature: the unimodular field |psi_e|/psi_e annihilates the
// basis and pairs with psi0 to d, within tol scaled by the L1 norms.
KktReport kkt_check(const ExtremalSolution& sol, const QuadDiff& psi0,
                    const std::vector<QuadDiff>& basis, double tol);

// Coefficient bound 2k/(n-1) with its admissibility flag k <= 1/(n^2+1)
// (n = 2: bound 2k, every k < 1 admissible).
std::pair<double, bool> coeff_bound(int n, double k);

struct KnBracket {
    double lower = 0.0;  // 1/(n^2+1)
    double upper = 0.0;  // (2/(n(n-1)))^(1/(n-2))
    double crossing_residual = 0.0;  // numeric root vs upper bound
    bool competitor_loses = false;   // 2k/(n-1) >= n k^(n-1) at k = lower
};
KnBracket kn_bracket(int n);

// ||J'|| / (||J'|| + M + 1): effective lower bound for the validity radius
// of the first-order sharp bound, with ||J'|| = ||psi0||_1 / pi.
double k0_lower_bound(double jprime_norm, double M);

// First-order minimal dilatation r/d attaining level r; the quadratic
// remainder is not modeled.
double min_dilatation_for_level(double r, double d);

struct SharpBoundOptions {
    int grid_n = 128;
    double half_width = 4.0;
    std::uint64_t seed = 0x452821e638d01377ull;
    double tol = 1e-8;
    bool use_solver = false;  // also evaluate J via the Beltrami solver
};

struct SharpBoundReport {
    int samples = 0;
    int violations = 0;         // values beyond bound + slack
    double bound = 0.0;         // (k/pi) ||psi0||_1
    double max_value = 0.0;     // largest |first-order J| seen
    double empirical_c = 0.0;   // max(0, max_value - bound)/k^2
    double maximizer_distance = 0.0;  // L2 distance of the maximizer to the
                                      // nearest Teichmueller-form field
    double slack = 0.0;
};

// Monte Carlo scan of random fields at sup norm k against the first-order
// sharp bound attained by the Teichmueller-form coefficient of psi0.
SharpBoundReport sharp_bound_experiment(const FunctionalSpec& J, double k, int samples,
                                        const SharpBoundOptions& opt = {});

}  // namespace teichlab
