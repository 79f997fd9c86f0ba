#pragma once

#include "teichlab/laurent.hpp"

namespace teichlab {

// Schwarzian derivative of an exterior series.  For class-Sigma sources the
// expansion starts at z^{-4} with leading coefficient -6 b_1.
struct SchwarzianSeries {
    LaurentSeries series;
};

// (f''/f')' - (1/2)(f''/f')^2; requires an invertible leading coefficient
// of f'.
SchwarzianSeries schwarzian(const LaurentSeries& f);

// Compares schwarzian(homotopy(f, t)) with the coefficient rescale
// t^{-2} S_f(z/t) and returns the largest coefficient discrepancy over the
// common guaranteed window.
double homotopy_schwarzian_check(const LaurentSeries& f, cxd t);

struct BNormEstimate {
    double value = 0.0;             // max over the grid of (|z|^2-1)^2 |phi(z)|
    double refinement_delta = 0.0;  // change when the grid is halved
};

// Lower estimate of the hyperbolically weighted sup norm on 1 < |z| <= r_max,
// evaluated on a polar grid with a one-step refinement report.
BNormEstimate b_norm_estimate(const SchwarzianSeries& phi, double r_max = 20.0,
                              int grid = 256);

}  // namespace teichlab
