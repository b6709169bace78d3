#pragma once

#include "fracspec/fourier/annulus.hpp"
#include "fracspec/fractal/cantor.hpp"
#include "fracspec/tauberian/grid.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fracspec::experiments::detail {

/// Independent stream for task `task` of a run seeded with `seed` (splitmix64).
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task);

/// 53 raw bits scaled to [0, 1); the same on every platform.
double unit_double(std::mt19937_64& rng);

struct SpanTrial {
    tauberian::GridFunction f;
    int designed_zeros = 0;
};

/// Random spectrum on Z_m with roughly a quarter of the coefficients forced to zero.
SpanTrial random_span_trial(int m, std::mt19937_64& rng);

/// Radii 16 + 81 a over the left endpoints a of the level-4 middle-thirds intervals.
std::vector<int> cantor_design_radii();

/// f on Z_m^2 whose transform is 1 except on lattice shells round(|k|) in `radii`.
tauberian::GridFunction designed_radial_zeros(int m, const std::vector<int>& radii);

struct SalemRun {
    fractal::CantorParams params;
    fourier::AnnulusDiagnostics diagnostics;
};

/// N = 4, eta = 1/16 Cantor measure with seeded random translates; |nu^|^q
/// over octaves j0..j1 on the line.
SalemRun salem_diagnostics(std::uint64_t seed, double q, int J, int j0, int j1, double panel_width, unsigned jobs);

}  // namespace fracspec::experiments::detail
