// Hot loops shared by the solvers: pointwise complex kernels and reductions.
//
// OpenMP versions live in hwkb::kern, a plain serial mirror in
// hwkb::kern::serial (kept for testing and for the kernel benchmark).
// Pointwise kernels compute each element independently, so results are
// bit-identical for any thread count.  Reductions use fixed-size blocks whose
// partial sums are accumulated in block order, which makes them independent
// of the thread count as well (they may differ from the serial mirror's
// left-to-right rounding; tests compare with tolerances).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hwkb/field.hpp"

namespace hwkb::kern {

inline constexpr std::ptrdiff_t reduction_block = 4096;

// ---- deterministic blocked reduction -------------------------------------

template <class TermFn>
double blocked_sum(std::size_t n, TermFn&& term) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
    const std::ptrdiff_t nblocks = (nn + reduction_block - 1) / reduction_block;
    std::vector<double> partial(static_cast<std::size_t>(std::max<std::ptrdiff_t>(nblocks, 1)), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        const std::ptrdiff_t lo = b * reduction_block;
        const std::ptrdiff_t hi = std::min(lo + reduction_block, nn);
        double s = 0.0;
        for (std::ptrdiff_t i = lo; i < hi; ++i) s += term(static_cast<std::size_t>(i));
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) total += partial[static_cast<std::size_t>(b)];
    return total;
}

template <class TermFn>
double blocked_max(std::size_t n, TermFn&& term) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::ptrdiff_t i = 0; i < nn; ++i) m = std::max(m, term(static_cast<std::size_t>(i)));
    return m;
}

// ---- pointwise kernels ----------------------------------------------------

inline void scale(cplx* a, std::size_t n, double c) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) a[i] *= c;
}

// y[i] += alpha * x[i]
inline void axpy(cplx* y, const cplx* x, std::size_t n, double alpha) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) y[i] += alpha * x[i];
}

// out[i] = y[i] + c * k[i]
inline void stage(cplx* out, const cplx* y, const cplx* k, std::size_t n, double c) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) out[i] = y[i] + c * k[i];
}

// y[i] += (dt/6) * (k1 + 2 k2 + 2 k3 + k4)
inline void rk4_combine(cplx* y, const cplx* k1, const cplx* k2, const cplx* k3,
                        const cplx* k4, std::size_t n, double dt) {
    const double c = dt / 6.0;
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i)
        y[i] += c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

inline void mul(cplx* a, const cplx* b, std::size_t n) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) a[i] *= b[i];
}

// spectral multiplier by a real table
inline void mul_real_table(cplx* a, const double* w, std::size_t n) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) a[i] *= w[i];
}

// a[i] *= exp(i * c * w[i]), w real-valued (stored in the real part)
inline void phase_rotate(cplx* a, const cplx* w, std::size_t n, double c) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        const double th = c * w[i].real();
        a[i] *= cplx(std::cos(th), std::sin(th));
    }
}

// out[i] = |a[i]|^2 (imaginary part zero)
inline void abs2(cplx* out, const cplx* a, std::size_t n) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        const double re = a[i].real(), im = a[i].imag();
        out[i] = cplx(re * re + im * im, 0.0);
    }
}

inline void realify(cplx* a, std::size_t n) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) a[i] = cplx(a[i].real(), 0.0);
}

inline void fill(cplx* a, std::size_t n, cplx v) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) a[i] = v;
}

// ---- reductions -----------------------------------------------------------

inline double sum_abs2(const cplx* a, std::size_t n) {
    return blocked_sum(n, [&](std::size_t i) {
        return a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    });
}

inline double max_abs(const cplx* a, std::size_t n) {
    return blocked_max(n, [&](std::size_t i) { return std::abs(a[i]); });
}

inline double max_abs_imag(const cplx* a, std::size_t n) {
    return blocked_max(n, [&](std::size_t i) { return std::abs(a[i].imag()); });
}

// Re <a, b> = sum Re(a[i] * conj(b[i]))
inline double dot_re(const cplx* a, const cplx* b, std::size_t n) {
    return blocked_sum(n, [&](std::size_t i) {
        return a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    });
}

// ---- serial reference (testing / benchmark baseline) ----------------------

namespace serial {

inline void scale(cplx* a, std::size_t n, double c) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= c;
}
inline void axpy(cplx* y, const cplx* x, std::size_t n, double alpha) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}
inline void stage(cplx* out, const cplx* y, const cplx* k, std::size_t n, double c) {
    for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + c * k[i];
}
inline void rk4_combine(cplx* y, const cplx* k1, const cplx* k2, const cplx* k3,
                        const cplx* k4, std::size_t n, double dt) {
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i)
        y[i] += c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}
inline void mul_real_table(cplx* a, const double* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= w[i];
}
inline void phase_rotate(cplx* a, const cplx* w, std::size_t n, double c) {
    for (std::size_t i = 0; i < n; ++i) {
        const double th = c * w[i].real();
        a[i] *= cplx(std::cos(th), std::sin(th));
    }
}
inline void abs2(cplx* out, const cplx* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real(), im = a[i].imag();
        out[i] = cplx(re * re + im * im, 0.0);
    }
}
inline double sum_abs2(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}
inline double max_abs(const cplx* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}
inline double dot_re(const cplx* a, const cplx* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

} // namespace serial
} // namespace hwkb::kern
