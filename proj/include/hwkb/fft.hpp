// FFTW-backed n-dimensional complex transforms with a per-grid plan registry.
//
// Plans are created once per grid under a mutex with FFTW_ESTIMATE (the
// heuristic planner is deterministic, timing-based planning is not) and
// executed via the new-array interface, which is thread-safe.  Each transform
// runs single-threaded; callers parallelize across independent transforms, so
// results do not depend on the thread count.
#pragma once

#include "hwkb/field.hpp"
#include "hwkb/grid.hpp"

namespace hwkb {

class FftPlans {
  public:
    // Registry lookup, creating plans on first use for this grid shape.
    static const FftPlans& get(const Grid& g);

    // Unnormalized DFTs: forward uses e^{-i xi.x}, backward e^{+i xi.x}.
    void forward_raw(cplx* in, cplx* out) const;
    void backward_raw(cplx* in, cplx* out) const;

    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;
    ~FftPlans();

  private:
    explicit FftPlans(const Grid& g);
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
};

// Scaled transforms fixing the continuum convention:
//   forward:  f_hat(xi) = spacing^n * DFT(f)   ~ integral f e^{-i xi.x} dx
//   inverse:  f(x)      = DFT^{-1}(f_hat) / L^n
Field transform(const Field& f, Space direction_to);

// In-place raw helpers for solver pipelines (buffer reuse).
void fft_forward_scaled(const Grid& g, cplx* in, cplx* out);   // applies spacing^n
void fft_backward_scaled(const Grid& g, cplx* in, cplx* out);  // applies 1/L^n

} // namespace hwkb
