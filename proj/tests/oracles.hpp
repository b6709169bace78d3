#pragma once

// Slow, obviously-correct reference computations used as test oracles.
// Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

inline double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

/// Smallest k such that some k points cover all with open balls of radius eps.
inline std::size_t min_cover(const std::vector<Point>& pts, double eps) {
    const std::size_t n = pts.size();
    std::size_t best = n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k >= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            bool hit = false;
            for (std::size_t c = 0; c < n && !hit; ++c)
                if ((mask >> c & 1u) && dist(pts[i], pts[c]) < eps) hit = true;
            ok = hit;
        }
        if (ok) best = k;
    }
    return best;
}

/// Largest subset with pairwise distances >= 2 eps.
inline std::size_t max_packing(const std::vector<Point>& pts, double eps) {
    const std::size_t n = pts.size();
    std::size_t best = n ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1u) && (mask >> j & 1u) && dist(pts[i], pts[j]) < 2 * eps) ok = false;
        if (ok) best = k;
    }
    return best;
}

/// Length of a union of closed intervals given as (lo, hi).
inline double union_length(std::vector<std::pair<double, double>> iv) {
    std::sort(iv.begin(), iv.end());
    double total = 0.0, lo = 0.0, hi = 0.0;
    bool open = false;
    for (const auto& [a, b] : iv) {
        if (!open || a > hi) {
            if (open) total += hi - lo;
            lo = a;
            hi = b;
            open = true;
        } else {
            hi = std::max(hi, b);
        }
    }
    if (open) total += hi - lo;
    return total;
}

/// Monte Carlo-free area of a union of disks by midpoint rule on a fine grid.
inline double disk_union_area_grid(const std::vector<Point>& centers, double r, int per_unit) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : centers) {
        xmin = std::min(xmin, c[0] - r);
        xmax = std::max(xmax, c[0] + r);
        ymin = std::min(ymin, c[1] - r);
        ymax = std::max(ymax, c[1] + r);
    }
    const double h = 1.0 / per_unit;
    double area = 0.0;
    for (double x = xmin + h / 2; x < xmax; x += h)
        for (double y = ymin + h / 2; y < ymax; y += h)
            for (const auto& c : centers)
                if ((x - c[0]) * (x - c[0]) + (y - c[1]) * (y - c[1]) < r * r) {
                    area += h * h;
                    break;
                }
    return area;
}

/// Unitary DFT by the defining O(m^2) sum.
inline std::vector<std::complex<double>> direct_dft(const std::vector<std::complex<double>>& f) {
    const std::size_t m = f.size();
    std::vector<std::complex<double>> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t x = 0; x < m; ++x)
            s += f[x] * std::polar(1.0, -2.0 * M_PI * static_cast<double>((k * x) % m) / static_cast<double>(m));
        out[k] = s / std::sqrt(static_cast<double>(m));
    }
    return out;
}

/// (h * f)(x) = sum_y h(y) f(x - y) on Z_m.
inline std::vector<std::complex<double>> circular_convolution(const std::vector<std::complex<double>>& h,
                                                              const std::vector<std::complex<double>>& f) {
    const std::size_t m = f.size();
    std::vector<std::complex<double>> out(m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) out[x] += h[y] * f[(x + m - y) % m];
    return out;
}

inline double l2(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

}  // namespace oracle
