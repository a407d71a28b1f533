// Spectral derivatives, mollifier, dealiasing and the norm family used by the
// solvers and diagnostics.
#pragma once

#include <optional>

#include "hwkb/fft.hpp"
#include "hwkb/field.hpp"

namespace hwkb {

enum class NormKind { L2, Lp, Linf, Hs, Xs };

struct NormValue {
    NormKind kind;
    double parameter; // p for Lp, s for Hs/Xs, unused otherwise
    double value;
};

// grad(f): component j = inverse transform of (i xi_j) f_hat.
VectorField gradient(const Field& f);

// Laplacian via -|xi|^2 multiplier.
Field laplacian(const Field& f);

// ||f||_{H^s} = ( L^{-n} sum (1+|xi|^2)^s |f_hat|^2 )^{1/2}; accepts physical
// or spectral input.
NormValue sobolev_norm(const Field& f, double s);

// ||f||_{X^s} = ||f||_{Linf} + ||grad f||_{H^{s-1}} (l2 over components);
// requires s > 1.
NormValue zhidkov_norm(const Field& f, double s);

// spacing-weighted discrete L^p norm, p >= 1 or infinity
// (pass p = infinity() for the sup norm).
NormValue lebesgue_norm(const Field& f, double p);

// homogeneous seminorm ||f||_{Hdot^s} (zero mode excluded).
double homogeneous_norm(const Field& f, double s);

// ||grad v||_{H^s} for a vector field (l2 over all components i,j of d_j v_i).
double grad_hs_norm(const VectorField& v, double s);

// L2 norm of the antisymmetric part d_i v_j - d_j v_i (l2 over pairs).
double curl_l2(const VectorField& v);

// J_delta: spectral multiplier e^{-delta^2 |xi|^2}; delta = 0 is the identity
// (bit-exact: no transform round-trip is performed).
Field mollify(const Field& f, double delta);

// two-thirds rule: zero every mode with any |m_j| > M/3.
Field dealias(const Field& f);

// |xi|^k f, spectral multiplier (used by diagnostics and oracle tests).
Field homogeneous_derivative(const Field& f, double k);

// fraction of the L2 mass carried by modes with |xi| >= cutoff.
double spectral_mass_fraction_above(const Field& f, double cutoff);

// fraction of L2 mass in the band max_j |m_j| >= band_start (alias watchdog).
double nyquist_band_fraction(const Field& f, int band_start);

// 3x the rms spectral radius of f: the resolution rule's working definition
// of "spectral extent".
double spectral_extent(const Field& f);

// in-place spectral pipeline helpers on raw buffers (solver hot path)
namespace pipeline {
// multiply spectrum by i*xi_d (derivative along axis d)
void mul_i_xi(const Grid& g, cplx* spec, int axis);
// multiply by -|xi|^2
void mul_neg_xi_sq(const Grid& g, cplx* spec);
// multiply by the dealias mask
void apply_dealias(const Grid& g, cplx* spec);
// multiply by e^{-delta^2 |xi|^2}
void apply_mollifier(const Grid& g, cplx* spec, double delta);
const std::vector<double>& xi_sq_table(const Grid& g);
const std::vector<unsigned char>& dealias_mask(const Grid& g);
} // namespace pipeline

} // namespace hwkb
