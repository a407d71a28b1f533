// Periodic-box lattice: [0,L)^n sampled with M points per axis (M a power of
// two).  Frequencies are xi = (2*pi/L)*m with integer m in [-M/2, M/2).
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hwkb {

struct Grid {
    int dim = 0;
    int points = 0;        // M, per axis
    double box_length = 0; // L

    Grid() = default;
    Grid(int dim_, int points_, double box_length_)
        : dim(dim_), points(points_), box_length(box_length_) {
        if (dim < 1)
            throw std::domain_error("Grid: dim must be >= 1");
        if (points < 2 || (points & (points - 1)) != 0)
            throw std::domain_error("Grid: points must be a power of two >= 2");
        if (!(box_length > 0))
            throw std::domain_error("Grid: box_length must be positive");
    }

    double spacing() const { return box_length / points; }
    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(points);
        return s;
    }
    double cell_volume() const { return std::pow(spacing(), dim); }
    double volume() const { return std::pow(box_length, dim); }

    // integer mode for storage index k along one axis (FFT layout)
    int mode(int k) const { return k < points / 2 ? k : k - points; }
    double freq_step() const { return 2.0 * std::numbers::pi / box_length; }
    double nyquist() const { return freq_step() * (points / 2); }

    bool operator==(const Grid& o) const {
        return dim == o.dim && points == o.points && box_length == o.box_length;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

// Decompose a flat row-major index into per-axis storage indices.
inline void unravel(const Grid& g, std::size_t idx, int* out) {
    for (int d = g.dim - 1; d >= 0; --d) {
        out[d] = static_cast<int>(idx % g.points);
        idx /= g.points;
    }
}

// |xi|^2 at a flat spectral index.
inline double xi_sq(const Grid& g, std::size_t idx) {
    double s = 0.0;
    const double dxi = g.freq_step();
    for (int d = g.dim - 1; d >= 0; --d) {
        const int m = g.mode(static_cast<int>(idx % g.points));
        idx /= g.points;
        s += (dxi * m) * (dxi * m);
    }
    return s;
}

} // namespace hwkb
