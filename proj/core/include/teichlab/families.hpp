#pragma once

#include "teichlab/laurent.hpp"

namespace teichlab {

// z + b/z, the basic exterior map with an affine extension of dilatation |b|.
LaurentSeries b1_map(cxd b);

// z + b z^{-m}; univalent on the exterior disk for m|b| <= 1.
LaurentSeries bm_map(cxd b, int m);

// Quasiconformal counterparts of the Koebe function on the unit disk.
// n = 1 gives z/(1-tz)^2; n >= 2 gives the n-th root transform
// (koebe_qc(t,1) at z^n)^(1/n) = z + (2t/n) z^{n+1} + ...
// `order` is the highest retained power.
LaurentSeries koebe_qc(cxd t, int n, int order = 64);

// Exterior conjugate 1/f(1/z) of a class-S map; the result is class Sigma.
LaurentSeries sigma_from_s(const LaurentSeries& f);

}  // namespace teichlab
