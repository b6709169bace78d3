#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracspec::fourier {

/// Samples of a transform on the lattice spacing * Z^dim, |index| <= half_count
/// per axis, with a per-sample error bound.
struct SpectralGrid {
    int dim = 1;
    double spacing = 1.0;
    int half_count = 0;
    std::vector<std::complex<double>> values;
    std::vector<double> error_bounds;

    std::size_t side() const noexcept { return static_cast<std::size_t>(2 * half_count + 1); }
    std::vector<double> xi(std::size_t flat_index) const;

    /// Fills the grid from fn(xi) -> (value, error bound).
    static SpectralGrid sample(int dim, double spacing, int half_count,
                               const std::function<std::pair<std::complex<double>, double>(const std::vector<double>&)>& fn,
                               unsigned jobs = 1);
};

/// CSV columns: xi components, re, im, abs, error_bound.
void write_spectral_csv(std::ostream& out, const SpectralGrid& grid);

enum class Trend { summable_like, divergent_like };
std::string to_string(Trend trend);

struct OctaveIntegral {
    int octave = 0;
    double lower = 0.0;
    double upper = 0.0;
    double integral = 0.0;
};

struct AnnulusDiagnostics {
    double q = 0.0;
    int n = 1;
    std::vector<OctaveIntegral> octaves;
    std::vector<double> ratios;  ///< I_{j+1} / I_j
    /// Geometric mean of the last (up to) four consecutive ratios.
    double trend_ratio = 0.0;
    Trend verdict = Trend::divergent_like;
};

inline constexpr double kTrendThreshold = 0.9;

struct OctaveQuadrature {
    double panel_width = 0.25;  ///< must resolve the oscillation scale of the integrand
    unsigned jobs = 1;
};

/// Integrals of |g|^q over 2^j <= |xi| <= 2^{j+1} on the line, both signs.
AnnulusDiagnostics lq_annulus_diagnostics_1d(const std::function<double(double)>& modulus, double q, int j0, int j1,
                                             const OctaveQuadrature& quad = {});

/// Same for a radial function on R^n: integrates |g(r)|^q |S^{n-1}| r^{n-1} dr.
AnnulusDiagnostics lq_annulus_diagnostics_radial(const std::function<double(double)>& radial_modulus, int n, double q,
                                                 int j0, int j1, const OctaveQuadrature& quad = {});

/// Lattice-sum version over a sampled grid (cell volume spacing^dim).
AnnulusDiagnostics lq_annulus_diagnostics(const SpectralGrid& grid, double q, int j0, int j1);

/// Trend verdict for a precomputed octave sequence.
AnnulusDiagnostics finish_diagnostics(double q, int n, std::vector<OctaveIntegral> octaves);

}  // namespace fracspec::fourier
