#pragma once

#include "fracspec/tauberian/grid.hpp"

#include <optional>
#include <vector>

namespace fracspec::tauberian {

struct SphericalZeroSet {
    std::vector<double> radii;  ///< lattice units, sorted
    std::vector<double> gaps;   ///< scanned radii whose shell held no lattice point
    double shell_width = 1.0;
    double tol = 0.0;
    double frequency_spacing = 1.0;  ///< 1 / (m cell): lattice units to frequency
};

/// Scans shells r - w/2 <= |k| < r + w/2 for r = w, 2w, ... below m/2 over the
/// centered frequency lattice of f^ (n = 2). A radius enters S when every
/// lattice point of its shell has |f^| < tol. Widths below one lattice spacing
/// leave some shells empty; those radii are reported as gaps, never as zeros.
SphericalZeroSet spherical_zero_radii(const GridFunction& f, std::optional<double> tol = std::nullopt,
                                      double shell_width = 1.0);

}  // namespace fracspec::tauberian
