#include "hwkb/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "hwkb/fft.hpp"
#include "hwkb/kernels.hpp"
#include "hwkb/spectral.hpp"

namespace hwkb {

namespace {

constexpr double pi = std::numbers::pi;

// integrand of S_{n,gamma}(X) = int_0^X u^{n/2-gamma} J_{n/2-1}(u) du
double radial_integrand(int n, double gamma, double u) {
    if (u <= 0.0) return 0.0;
    switch (n) {
        case 1: // J_{-1/2}(u) = sqrt(2/(pi u)) cos u
            return std::sqrt(2.0 / pi) * std::pow(u, -gamma) * std::cos(u);
        case 3: // J_{1/2}(u) = sqrt(2/(pi u)) sin u
            return std::sqrt(2.0 / pi) * std::pow(u, 1.0 - gamma) * std::sin(u);
        default:
            return std::pow(u, n / 2.0 - gamma) * std::cyl_bessel_j(n / 2.0 - 1.0, u);
    }
}

// convergent series for small X, from the Bessel power series
double radial_series(int n, double gamma, double x) {
    if (x <= 0.0) return 0.0;
    const double nu = n / 2.0 - 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < 80; ++k) {
        const double expo = n - gamma + 2.0 * k;
        const double term = sign * std::pow(x, expo) /
                            (std::pow(2.0, nu + 2.0 * k) * std::tgamma(k + 1.0) *
                             std::tgamma(nu + k + 1.0) * expo);
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && k > 2) break;
        sign = -sign;
    }
    return sum;
}

double adaptive_simpson(int n, double gamma, double a, double fa, double b, double fb,
                        double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = radial_integrand(n, gamma, lm);
    const double frm = radial_integrand(n, gamma, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(n, gamma, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(n, gamma, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

double integrate_segment(int n, double gamma, double a, double b) {
    if (b <= a) return 0.0;
    const double fa = radial_integrand(n, gamma, a);
    const double fb = radial_integrand(n, gamma, b);
    const double m = 0.5 * (a + b);
    const double fm = radial_integrand(n, gamma, m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(n, gamma, a, fa, b, fb, fm, whole, 1e-14 * std::max(1.0, b - a), 40);
}

std::mutex symbol_mutex;

struct SymbolKey {
    int dim, points;
    double L, gamma;
    bool operator<(const SymbolKey& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (points != o.points) return points < o.points;
        if (L != o.L) return L < o.L;
        return gamma < o.gamma;
    }
};

} // namespace

double riesz_constant(int n, double gamma) {
    return std::pow(pi, n / 2.0) * std::pow(2.0, n - gamma) *
           std::tgamma((n - gamma) / 2.0) / std::tgamma(gamma / 2.0);
}

double riesz_zero_mode(int n, double gamma, double box_length) {
    const double R = box_length / 2.0;
    const double omega = 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
    return omega * std::pow(R, n - gamma) / (n - gamma);
}

double riesz_symbol(int n, double gamma, double box_length, double q) {
    if (q == 0.0) return riesz_zero_mode(n, gamma, box_length);
    const double R = box_length / 2.0;
    const double X = q * R;
    const double head = std::min(X, 0.5);
    double S = radial_series(n, gamma, head);
    if (X > head) S += integrate_segment(n, gamma, head, X);
    return std::pow(2.0 * pi, n / 2.0) * std::pow(q, gamma - n) * S;
}

const std::vector<double>& riesz_symbol_table(const Grid& g, double gamma) {
    static std::map<SymbolKey, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(symbol_mutex);
    SymbolKey key{g.dim, g.points, g.box_length, gamma};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // distinct integer |m|^2 values on the lattice
    std::vector<long long> m2s;
    {
        std::unordered_map<long long, char> seen;
        int mm[8];
        for (std::size_t i = 0; i < g.size(); ++i) {
            unravel(g, i, mm);
            long long m2 = 0;
            for (int d = 0; d < g.dim; ++d) {
                const long long m = g.mode(mm[d]);
                m2 += m * m;
            }
            if (seen.emplace(m2, 1).second) m2s.push_back(m2);
        }
    }
    std::sort(m2s.begin(), m2s.end());

    // cumulative radial integral S(qR) at the needed radii, in one sweep
    const double R = g.box_length / 2.0;
    const double dxi = g.freq_step();
    const double head = 0.5;
    std::unordered_map<long long, double> sym_of_m2;
    double x_prev = head;
    double S_prev = radial_series(g.dim, gamma, head);
    for (long long m2 : m2s) {
        if (m2 == 0) {
            sym_of_m2[0] = riesz_zero_mode(g.dim, gamma, g.box_length);
            continue;
        }
        const double q = dxi * std::sqrt(static_cast<double>(m2));
        const double X = q * R;
        double S;
        if (X <= head) {
            S = radial_series(g.dim, gamma, X);
        } else {
            S_prev += integrate_segment(g.dim, gamma, x_prev, X);
            x_prev = X;
            S = S_prev;
        }
        sym_of_m2[m2] = std::pow(2.0 * pi, g.dim / 2.0) * std::pow(q, gamma - g.dim) * S;
    }

    std::vector<double> table(g.size());
    int mm[8];
    for (std::size_t i = 0; i < g.size(); ++i) {
        unravel(g, i, mm);
        long long m2 = 0;
        for (int d = 0; d < g.dim; ++d) {
            const long long m = g.mode(mm[d]);
            m2 += m * m;
        }
        table[i] = sym_of_m2[m2];
    }
    return cache.emplace(key, std::move(table)).first->second;
}

Field riesz_potential(const Field& f, double gamma) {
    if (!(gamma > 0.0 && gamma < f.grid.dim))
        throw std::domain_error("riesz_potential: requires 0 < gamma < n");
    require_space(f, Space::physical, "riesz_potential");
    const auto& table = riesz_symbol_table(f.grid, gamma);
    Field fh = transform(f, Space::spectral);
    kern::mul_real_table(fh.data(), table.data(), fh.size());
    Field out = transform(fh, Space::physical);
    if (f.is_real) {
        kern::realify(out.data(), out.size());
        out.is_real = true;
    }
    return out;
}

} // namespace hwkb
