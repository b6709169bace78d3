#include "shared.hpp"

#include "fracspec/fourier/cantor_fourier.hpp"

#include <algorithm>
#include <cmath>

namespace fracspec::experiments::detail {

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (task + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SpanTrial random_span_trial(int m, std::mt19937_64& rng) {
    std::vector<tauberian::Complex> spectrum(static_cast<std::size_t>(m));
    int zeros = 0;
    for (auto& c : spectrum) {
        if (rng() % 4 == 0) {
            ++zeros;
            continue;
        }
        // keep moduli away from the tolerance so the expected count is unambiguous
        const double radius = 0.1 + unit_double(rng);
        const double phase = 2.0 * kPi * unit_double(rng);
        c = std::polar(radius, phase);
    }
    auto values = tauberian::inverse_dft(m, 1, spectrum);
    return {tauberian::GridFunction(m, 1, 1.0, std::move(values)), zeros};
}

std::vector<int> cantor_design_radii() {
    const auto level = fractal::build_level(fractal::CantorParams::middle_thirds(), 4);
    std::vector<int> radii;
    for (const auto& iv : level.intervals.intervals())
        radii.push_back(16 + static_cast<int>(boost::multiprecision::numerator(Rational(iv.start * 81))));
    std::sort(radii.begin(), radii.end());
    return radii;
}

tauberian::GridFunction designed_radial_zeros(int m, const std::vector<int>& radii) {
    std::vector<tauberian::Complex> spectrum(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 1.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double r = std::hypot(tauberian::centered(i, m), tauberian::centered(j, m));
            const int shell = static_cast<int>(std::floor(r + 0.5));
            if (std::binary_search(radii.begin(), radii.end(), shell))
                spectrum[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] = 0.0;
        }
    }
    return tauberian::GridFunction(m, 2, 1.0, tauberian::inverse_dft(m, 2, spectrum));
}

SalemRun salem_diagnostics(std::uint64_t seed, double q, int J, int j0, int j1, double panel_width, unsigned jobs) {
    SalemRun out;
    out.params.N = 4;
    out.params.eta = Rational(1, 16);
    out.params.seed = seed;
    out.params.points = fractal::sample_salem_points(4, out.params.eta, seed);
    fractal::require_valid(out.params);
    const fourier::CantorTransform transform(out.params, J);
    fourier::OctaveQuadrature quad;
    quad.panel_width = panel_width;
    quad.jobs = jobs;
    out.diagnostics =
        fourier::lq_annulus_diagnostics_1d([&](double xi) { return std::abs(transform(xi).value); }, q, j0, j1, quad);
    return out;
}

}  // namespace fracspec::experiments::detail
