#include "hwkb/spectral.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hwkb/kernels.hpp"

namespace hwkb {

namespace pipeline {

namespace {
std::mutex table_mutex;

struct GridKey {
    int dim, points;
    double L;
    bool operator<(const GridKey& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (points != o.points) return points < o.points;
        return L < o.L;
    }
};
} // namespace

const std::vector<double>& xi_sq_table(const Grid& g) {
    static std::map<GridKey, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(table_mutex);
    GridKey key{g.dim, g.points, g.box_length};
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<double> t(g.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = xi_sq(g, i);
        it = cache.emplace(key, std::move(t)).first;
    }
    return it->second;
}

const std::vector<unsigned char>& dealias_mask(const Grid& g) {
    static std::map<GridKey, std::vector<unsigned char>> cache;
    std::lock_guard<std::mutex> lock(table_mutex);
    GridKey key{g.dim, g.points, g.box_length};
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<unsigned char> mask(g.size(), 1);
        const double cut = g.points / 3.0;
        int mm[8];
        for (std::size_t i = 0; i < mask.size(); ++i) {
            unravel(g, i, mm);
            for (int d = 0; d < g.dim; ++d) {
                const int m = g.mode(mm[d]);
                if (std::abs(m) > cut) {
                    mask[i] = 0;
                    break;
                }
            }
        }
        it = cache.emplace(key, std::move(mask)).first;
    }
    return it->second;
}

void mul_i_xi(const Grid& g, cplx* spec, int axis) {
    const double dxi = g.freq_step();
    const std::size_t n = g.size();
    // stride of `axis` in row-major layout
    std::size_t stride = 1;
    for (int d = g.dim - 1; d > axis; --d) stride *= g.points;
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
    const std::size_t P = static_cast<std::size_t>(g.points);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        const int k = static_cast<int>((static_cast<std::size_t>(i) / stride) % P);
        const double xi = dxi * g.mode(k);
        spec[i] *= cplx(0.0, xi);
    }
}

void mul_neg_xi_sq(const Grid& g, cplx* spec) {
    const auto& t = xi_sq_table(g);
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) spec[i] *= -t[i];
}

void apply_dealias(const Grid& g, cplx* spec) {
    const auto& mask = dealias_mask(g);
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i)
        if (!mask[i]) spec[i] = cplx(0.0, 0.0);
}

void apply_mollifier(const Grid& g, cplx* spec, double delta) {
    if (delta == 0.0) return;
    const auto& t = xi_sq_table(g);
    const double d2 = delta * delta;
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) spec[i] *= std::exp(-d2 * t[i]);
}

} // namespace pipeline

namespace {
Field to_spectral(const Field& f) {
    return f.space == Space::spectral ? f : transform(f, Space::spectral);
}
} // namespace

VectorField gradient(const Field& f) {
    require_space(f, Space::physical, "gradient");
    Field fh = transform(f, Space::spectral);
    VectorField out(f.grid);
    for (int d = 0; d < f.grid.dim; ++d) {
        cvec spec(fh.values);
        pipeline::mul_i_xi(f.grid, spec.data(), d);
        Field comp(f.grid, Space::physical, f.is_real);
        fft_backward_scaled(f.grid, spec.data(), comp.data());
        if (f.is_real) kern::realify(comp.data(), comp.size());
        comp.is_real = f.is_real;
        out[d] = std::move(comp);
    }
    return out;
}

Field laplacian(const Field& f) {
    require_space(f, Space::physical, "laplacian");
    Field fh = transform(f, Space::spectral);
    pipeline::mul_neg_xi_sq(f.grid, fh.data());
    Field out = transform(fh, Space::physical);
    if (f.is_real) {
        kern::realify(out.data(), out.size());
        out.is_real = true;
    }
    return out;
}

NormValue sobolev_norm(const Field& f, double s) {
    Field fh = to_spectral(f);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const double inv_vol = 1.0 / f.grid.volume();
    const double sum = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        const cplx v = fh.values[i];
        return std::pow(1.0 + t[i], s) * (v.real() * v.real() + v.imag() * v.imag());
    });
    return {NormKind::Hs, s, std::sqrt(sum * inv_vol)};
}

NormValue zhidkov_norm(const Field& f, double s) {
    if (!(s > 1.0)) throw std::domain_error("zhidkov_norm: requires s > 1");
    require_space(f, Space::physical, "zhidkov_norm");
    const double sup = kern::max_abs(f.data(), f.size());
    Field fh = transform(f, Space::spectral);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const double inv_vol = 1.0 / f.grid.volume();
    // sum_j ||d_j f||_{H^{s-1}}^2 = L^{-n} sum (1+|xi|^2)^{s-1} |xi|^2 |f_hat|^2
    const double sum = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        const cplx v = fh.values[i];
        return std::pow(1.0 + t[i], s - 1.0) * t[i] * (v.real() * v.real() + v.imag() * v.imag());
    });
    return {NormKind::Xs, s, sup + std::sqrt(sum * inv_vol)};
}

NormValue lebesgue_norm(const Field& f, double p) {
    require_space(f, Space::physical, "lebesgue_norm");
    if (std::isinf(p))
        return {NormKind::Linf, p, kern::max_abs(f.data(), f.size())};
    if (!(p >= 1.0)) throw std::domain_error("lebesgue_norm: requires p >= 1 or infinity");
    const double cell = f.grid.cell_volume();
    const double sum = kern::blocked_sum(f.size(), [&](std::size_t i) {
        return std::pow(std::abs(f.values[i]), p);
    });
    return {p == 2.0 ? NormKind::L2 : NormKind::Lp, p, std::pow(cell * sum, 1.0 / p)};
}

double homogeneous_norm(const Field& f, double s) {
    Field fh = to_spectral(f);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const double inv_vol = 1.0 / f.grid.volume();
    const double sum = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        if (t[i] == 0.0) return 0.0;
        const cplx v = fh.values[i];
        return std::pow(t[i], s) * (v.real() * v.real() + v.imag() * v.imag());
    });
    return std::sqrt(sum * inv_vol);
}

double grad_hs_norm(const VectorField& v, double s) {
    double total = 0.0;
    for (int i = 0; i < v.dim(); ++i) {
        Field fh = to_spectral(v[i]);
        const auto& t = pipeline::xi_sq_table(fh.grid);
        total += kern::blocked_sum(fh.size(), [&](std::size_t k) {
            const cplx z = fh.values[k];
            return std::pow(1.0 + t[k], s) * t[k] * (z.real() * z.real() + z.imag() * z.imag());
        }) / fh.grid.volume();
    }
    return std::sqrt(total);
}

double curl_l2(const VectorField& v) {
    const Grid& g = v.grid();
    std::vector<Field> spec;
    spec.reserve(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) spec.push_back(to_spectral(v[i]));
    const double dxi = g.freq_step();
    const double inv_vol = 1.0 / g.volume();
    double total = 0.0;
    int mm[8];
    for (int i = 0; i < v.dim(); ++i) {
        for (int j = i + 1; j < v.dim(); ++j) {
            total += kern::blocked_sum(g.size(), [&](std::size_t k) {
                unravel(g, k, mm);
                const double xi_i = dxi * g.mode(mm[i]);
                const double xi_j = dxi * g.mode(mm[j]);
                const cplx c = xi_i * spec[static_cast<std::size_t>(j)].values[k] -
                               xi_j * spec[static_cast<std::size_t>(i)].values[k];
                return c.real() * c.real() + c.imag() * c.imag();
            }) * inv_vol;
        }
    }
    return std::sqrt(total);
}

Field mollify(const Field& f, double delta) {
    if (delta < 0.0) throw std::domain_error("mollify: requires delta >= 0");
    if (delta == 0.0) return f;
    if (f.space == Space::spectral) {
        Field out = f;
        pipeline::apply_mollifier(f.grid, out.data(), delta);
        return out;
    }
    Field fh = transform(f, Space::spectral);
    pipeline::apply_mollifier(f.grid, fh.data(), delta);
    Field out = transform(fh, Space::physical);
    if (f.is_real) {
        kern::realify(out.data(), out.size());
        out.is_real = true;
    }
    return out;
}

Field dealias(const Field& f) {
    if (f.space == Space::spectral) {
        Field out = f;
        pipeline::apply_dealias(f.grid, out.data());
        return out;
    }
    Field fh = transform(f, Space::spectral);
    pipeline::apply_dealias(f.grid, fh.data());
    Field out = transform(fh, Space::physical);
    if (f.is_real) {
        kern::realify(out.data(), out.size());
        out.is_real = true;
    }
    return out;
}

Field homogeneous_derivative(const Field& f, double k) {
    Field fh = to_spectral(f);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(fh.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i)
        fh.values[static_cast<std::size_t>(i)] *=
            t[static_cast<std::size_t>(i)] == 0.0 ? 0.0
                                                  : std::pow(t[static_cast<std::size_t>(i)], k / 2.0);
    if (f.space == Space::spectral) return fh;
    return transform(fh, Space::physical);
}

double spectral_mass_fraction_above(const Field& f, double cutoff) {
    Field fh = to_spectral(f);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const double c2 = cutoff * cutoff;
    const double total = kern::sum_abs2(fh.data(), fh.size());
    if (total == 0.0) return 0.0;
    const double high = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        if (t[i] < c2) return 0.0;
        const cplx v = fh.values[i];
        return v.real() * v.real() + v.imag() * v.imag();
    });
    return high / total;
}

double nyquist_band_fraction(const Field& f, int band_start) {
    Field fh = to_spectral(f);
    const Grid& g = f.grid;
    const double total = kern::sum_abs2(fh.data(), fh.size());
    if (total == 0.0) return 0.0;
    const double high = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        int mm[8];
        unravel(g, i, mm);
        int mx = 0;
        for (int d = 0; d < g.dim; ++d) mx = std::max(mx, std::abs(g.mode(mm[d])));
        if (mx < band_start) return 0.0;
        const cplx v = fh.values[i];
        return v.real() * v.real() + v.imag() * v.imag();
    });
    return high / total;
}

double spectral_extent(const Field& f) {
    Field fh = to_spectral(f);
    const auto& t = pipeline::xi_sq_table(f.grid);
    const double total = kern::sum_abs2(fh.data(), fh.size());
    if (total == 0.0) return 0.0;
    const double second = kern::blocked_sum(fh.size(), [&](std::size_t i) {
        const cplx v = fh.values[i];
        return t[i] * (v.real() * v.real() + v.imag() * v.imag());
    });
    return 3.0 * std::sqrt(second / total);
}

} // namespace hwkb
