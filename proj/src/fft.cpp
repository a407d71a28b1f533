#include "hwkb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "hwkb/kernels.hpp"

namespace hwkb {

namespace {
std::mutex planner_mutex;
std::map<std::tuple<int, int>, std::unique_ptr<FftPlans>>& registry() {
    static std::map<std::tuple<int, int>, std::unique_ptr<FftPlans>> r;
    return r;
}
} // namespace

FftPlans::FftPlans(const Grid& g) {
    cvec scratch_in(g.size()), scratch_out(g.size());
    int dims[8];
    if (g.dim > 8) throw std::domain_error("FftPlans: dim too large");
    for (int d = 0; d < g.dim; ++d) dims[d] = g.points;
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    fwd_ = fftw_plan_dft(g.dim, dims, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft(g.dim, dims, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd_ || !bwd_) throw std::runtime_error("FftPlans: plan creation failed");
}

FftPlans::~FftPlans() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

const FftPlans& FftPlans::get(const Grid& g) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto key = std::make_tuple(g.dim, g.points);
    auto it = registry().find(key);
    if (it == registry().end())
        it = registry().emplace(key, std::unique_ptr<FftPlans>(new FftPlans(g))).first;
    return *it->second;
}

void FftPlans::forward_raw(cplx* in, cplx* out) const {
    fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                     reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

void FftPlans::backward_raw(cplx* in, cplx* out) const {
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

void fft_forward_scaled(const Grid& g, cplx* in, cplx* out) {
    FftPlans::get(g).forward_raw(in, out);
    kern::scale(out, g.size(), g.cell_volume());
}

void fft_backward_scaled(const Grid& g, cplx* in, cplx* out) {
    FftPlans::get(g).backward_raw(in, out);
    kern::scale(out, g.size(), 1.0 / g.volume());
}

Field transform(const Field& f, Space direction_to) {
    if (f.space == direction_to)
        throw std::invalid_argument("transform: field already in requested representation");
    Field out(f.grid, direction_to, false);
    // FFTW new-array execution does not modify the input for out-of-place
    // c2c plans, but the API wants non-const pointers.
    auto* in = const_cast<cplx*>(f.data());
    if (direction_to == Space::spectral)
        fft_forward_scaled(f.grid, in, out.data());
    else
        fft_backward_scaled(f.grid, in, out.data());
    // is_real asserts the represented function is real-valued; that is
    // representation-independent.
    out.is_real = f.is_real;
    return out;
}

} // namespace hwkb
