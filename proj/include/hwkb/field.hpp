// Field: complex samples on a Grid, in physical or spectral representation.
// VectorField: dim real-flagged components on one shared grid.
#pragma once

#include <complex>
#include <cstdlib>
#include <new>
#include <stdexcept>
#include <vector>

#include "hwkb/grid.hpp"

namespace hwkb {

using cplx = std::complex<double>;

// 32-byte aligned allocator so FFTW new-array execution sees the same
// alignment class as the arrays its plans were created with.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t alignment = 32;
    AlignedAllocator() = default;
    template <class U> AlignedAllocator(const AlignedAllocator<U>&) {}
    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(alignment, ((n * sizeof(T) + alignment - 1) / alignment) * alignment);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }
    template <class U> bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using cvec = std::vector<cplx, AlignedAllocator<cplx>>;

enum class Space { physical, spectral };

struct Field {
    Grid grid;
    Space space = Space::physical;
    bool is_real = false; // asserts Im(values) is zero up to round-off (physical space)
    cvec values;

    Field() = default;
    explicit Field(const Grid& g, Space sp = Space::physical, bool real_flag = false)
        : grid(g), space(sp), is_real(real_flag), values(g.size(), cplx(0.0, 0.0)) {}

    std::size_t size() const { return values.size(); }
    cplx* data() { return values.data(); }
    const cplx* data() const { return values.data(); }
};

inline void require_same_grid(const Field& a, const Field& b, const char* what) {
    if (a.grid != b.grid)
        throw std::invalid_argument(std::string(what) + ": grid metadata mismatch");
}

inline void require_space(const Field& f, Space s, const char* what) {
    if (f.space != s)
        throw std::invalid_argument(std::string(what) + (s == Space::physical
                                        ? ": expected physical-space field"
                                        : ": expected spectral-space field"));
}

struct VectorField {
    std::vector<Field> comps;

    VectorField() = default;
    explicit VectorField(const Grid& g) {
        comps.reserve(g.dim);
        for (int d = 0; d < g.dim; ++d) comps.emplace_back(g, Space::physical, true);
    }

    const Grid& grid() const {
        if (comps.empty()) throw std::logic_error("VectorField: empty");
        return comps.front().grid;
    }
    int dim() const { return static_cast<int>(comps.size()); }
    Field& operator[](int d) { return comps[static_cast<std::size_t>(d)]; }
    const Field& operator[](int d) const { return comps[static_cast<std::size_t>(d)]; }
};

} // namespace hwkb
