// Riesz potential |x|^{-gamma} * f on the periodic box, implemented as the
// spectral multiplier of the ball-truncated kernel |x|^{-gamma} 1_{|x|<=L/2}.
//
// For fields concentrated well inside the box the truncated convolution
// agrees with the whole-space one to the field's tail mass, so the operator
// reproduces free-space closed forms (Coulomb of a Gaussian, multiplier
// eigenfunctions) to spectral accuracy instead of carrying the O(1/L)
// periodic-image offset of the raw power-law symbol.  The zero mode is the
// kernel integral K0 = omega_{n-1} (L/2)^{n-gamma} / (n-gamma), which is the
// q -> 0 limit of the same symbol.
#pragma once

#include <vector>

#include "hwkb/field.hpp"

namespace hwkb {

// F[|x|^{-gamma}] = riesz_constant(n,gamma) |xi|^{gamma-n} (whole space);
// the classical constant pi^{n/2} 2^{n-gamma} Gamma((n-gamma)/2) / Gamma(gamma/2).
double riesz_constant(int n, double gamma);

// zero-mode value K0
double riesz_zero_mode(int n, double gamma, double box_length);

// truncated-kernel symbol at radial frequency q >= 0 (R = L/2)
double riesz_symbol(int n, double gamma, double box_length, double q);

// per-grid multiplier table (cached)
const std::vector<double>& riesz_symbol_table(const Grid& g, double gamma);

// |x|^{-gamma} * f; requires 0 < gamma < n and physical-space input.
// Real input yields a real-flagged output.
Field riesz_potential(const Field& f, double gamma);

} // namespace hwkb
