#include "fracspec/fourier/annulus.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"
#include "fracspec/common/parallel.hpp"
#include "fracspec/fourier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace fracspec::fourier {

namespace {

void check_octaves(double q, int j0, int j1) {
    if (!(q >= 1.0)) throw DomainError("q must be >= 1");
    if (j1 - j0 + 1 < 4) throw DomainError("annulus diagnostics need at least 4 octaves");
}

double octave_integral(const std::function<double(double)>& integrand, int j, const OctaveQuadrature& quad) {
    const double lo = std::ldexp(1.0, j), hi = std::ldexp(1.0, j + 1);
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / quad.panel_width)));
    if (panels < 64) return composite_gauss(integrand, lo, hi, panels);
    // Chunk boundaries are fixed by the panel count, never by the thread count.
    constexpr std::size_t kChunks = 64;
    const double h = (hi - lo) / static_cast<double>(panels);
    std::vector<double> parts(kChunks);
    parallel_for(kChunks, quad.jobs, [&](std::size_t c) {
        const std::size_t first = panels * c / kChunks, last = panels * (c + 1) / kChunks;
        const double a = lo + h * static_cast<double>(first);
        const double b = (last == panels) ? hi : lo + h * static_cast<double>(last);
        parts[c] = composite_gauss(integrand, a, b, last - first);
    });
    return pairwise_sum(parts);
}

}  // namespace

std::vector<double> SpectralGrid::xi(std::size_t flat_index) const {
    std::vector<double> out(static_cast<std::size_t>(dim));
    const std::size_t s = side();
    for (int d = dim - 1; d >= 0; --d) {
        out[static_cast<std::size_t>(d)] = spacing * (static_cast<double>(flat_index % s) - half_count);
        flat_index /= s;
    }
    return out;
}

SpectralGrid SpectralGrid::sample(int dim, double spacing, int half_count,
                                  const std::function<std::pair<std::complex<double>, double>(const std::vector<double>&)>& fn,
                                  unsigned jobs) {
    if (dim < 1) throw DomainError("grid dimension must be >= 1");
    if (!(spacing > 0.0)) throw DomainError("grid spacing must be positive");
    if (half_count < 0) throw DomainError("grid extent must be non-negative");
    SpectralGrid g;
    g.dim = dim;
    g.spacing = spacing;
    g.half_count = half_count;
    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) total *= g.side();
    g.values.resize(total);
    g.error_bounds.resize(total);
    parallel_for(total, jobs, [&](std::size_t i) {
        const auto [v, e] = fn(g.xi(i));
        g.values[i] = v;
        g.error_bounds[i] = e;
    });
    return g;
}

void write_spectral_csv(std::ostream& out, const SpectralGrid& grid) {
    for (int d = 0; d < grid.dim; ++d) out << "xi" << d << ',';
    out << "re,im,abs,error_bound\n";
    out << std::setprecision(17);
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        for (double x : grid.xi(i)) out << x << ',';
        const auto v = grid.values[i];
        out << v.real() << ',' << v.imag() << ',' << std::abs(v) << ','
            << (grid.error_bounds.empty() ? 0.0 : grid.error_bounds[i]) << '\n';
    }
}

std::string to_string(Trend trend) { return trend == Trend::summable_like ? "summable-like" : "divergent-like"; }

AnnulusDiagnostics finish_diagnostics(double q, int n, std::vector<OctaveIntegral> octaves) {
    AnnulusDiagnostics out;
    out.q = q;
    out.n = n;
    out.octaves = std::move(octaves);
    for (std::size_t k = 0; k + 1 < out.octaves.size(); ++k) {
        const double a = out.octaves[k].integral, b = out.octaves[k + 1].integral;
        out.ratios.push_back(a > 0.0 ? b / a : (b > 0.0 ? std::numeric_limits<double>::infinity() : 0.0));
    }
    const std::size_t k = std::min<std::size_t>(4, out.ratios.size());
    const double last = out.octaves.back().integral;
    const double first = out.octaves[out.octaves.size() - 1 - k].integral;
    if (last == 0.0) {
        out.trend_ratio = 0.0;
    } else if (first == 0.0) {
        out.trend_ratio = std::numeric_limits<double>::infinity();
    } else {
        out.trend_ratio = std::pow(last / first, 1.0 / static_cast<double>(k));
    }
    out.verdict = out.trend_ratio < kTrendThreshold ? Trend::summable_like : Trend::divergent_like;
    return out;
}

AnnulusDiagnostics lq_annulus_diagnostics_1d(const std::function<double(double)>& modulus, double q, int j0, int j1,
                                             const OctaveQuadrature& quad) {
    check_octaves(q, j0, j1);
    auto integrand = [&](double x) { return std::pow(modulus(x), q) + std::pow(modulus(-x), q); };
    std::vector<OctaveIntegral> octaves;
    for (int j = j0; j <= j1; ++j)
        octaves.push_back({j, std::ldexp(1.0, j), std::ldexp(1.0, j + 1), octave_integral(integrand, j, quad)});
    return finish_diagnostics(q, 1, std::move(octaves));
}

AnnulusDiagnostics lq_annulus_diagnostics_radial(const std::function<double(double)>& radial_modulus, int n, double q,
                                                 int j0, int j1, const OctaveQuadrature& quad) {
    check_octaves(q, j0, j1);
    if (n < 1) throw DomainError("dimension must be >= 1");
    const double area = unit_sphere_area(n);
    auto integrand = [&](double r) { return area * std::pow(radial_modulus(r), q) * std::pow(r, n - 1); };
    std::vector<OctaveIntegral> octaves;
    for (int j = j0; j <= j1; ++j)
        octaves.push_back({j, std::ldexp(1.0, j), std::ldexp(1.0, j + 1), octave_integral(integrand, j, quad)});
    return finish_diagnostics(q, n, std::move(octaves));
}

AnnulusDiagnostics lq_annulus_diagnostics(const SpectralGrid& grid, double q, int j0, int j1) {
    check_octaves(q, j0, j1);
    const double top = grid.spacing * grid.half_count;
    if (std::ldexp(1.0, j1 + 1) > top * (1.0 + 1e-12))
        throw DomainError("grid extent does not cover the requested annuli");
    const double cell = std::pow(grid.spacing, grid.dim);
    std::vector<std::vector<double>> terms(static_cast<std::size_t>(j1 - j0 + 1));
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        const auto x = grid.xi(i);
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        const double r = std::sqrt(r2);
        if (r <= 0.0) continue;
        const int j = static_cast<int>(std::floor(std::log2(r)));
        if (j < j0 || j > j1) continue;
        terms[static_cast<std::size_t>(j - j0)].push_back(std::pow(std::abs(grid.values[i]), q) * cell);
    }
    std::vector<OctaveIntegral> octaves;
    for (int j = j0; j <= j1; ++j)
        octaves.push_back({j, std::ldexp(1.0, j), std::ldexp(1.0, j + 1), pairwise_sum(terms[static_cast<std::size_t>(j - j0)])});
    return finish_diagnostics(q, grid.dim, std::move(octaves));
}

}  // namespace fracspec::fourier
