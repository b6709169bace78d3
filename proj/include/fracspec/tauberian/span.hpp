#pragma once

#include "fracspec/tauberian/grid.hpp"

#include <optional>
#include <vector>

namespace fracspec::tauberian {

struct ZeroSet {
    std::vector<std::vector<int>> indices;  ///< uncentered lattice indices with |f^| < tol
    double tol = 0.0;
    double max_modulus = 0.0;
    std::vector<double> moduli;  ///< |f^| per flat index
};

/// Default tolerance: 1e-9 * max |f^|.
double default_tolerance(double max_modulus);

ZeroSet dft_zero_set(const GridFunction& f, std::optional<double> tol = std::nullopt);

/// Dimension of span{f(. - y)} on Z_m: number of DFT moduli above tol.
int span_dimension_oracle(const GridFunction& f, std::optional<double> tol = std::nullopt);

/// Rank of the circulant C[i][j] = f[i - j] by SVD, with singular values
/// compared against sqrt(m) * tol (the unitary DFT scaling).
int circulant_rank(const GridFunction& f, std::optional<double> tol = std::nullopt);

struct Annihilator {
    double residual = 0.0;     ///< min over unit h of ||h * f||_2 = sqrt(m) min |f^|
    double min_modulus = 0.0;  ///< min |f^| (unitary)
    int frequency = 0;         ///< argmin
    double tol = 0.0;
    std::optional<std::vector<Complex>> witness;  ///< exp(2 pi i k0 x / m) / sqrt(m) when min |f^| < tol
};

/// Convolution here is the plain sum over Z_m (cell ignored).
Annihilator annihilator_residual(const GridFunction& f, std::optional<double> tol = std::nullopt);

}  // namespace fracspec::tauberian
