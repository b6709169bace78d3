#pragma once

#include "fracspec/fractal/cantor.hpp"

#include <complex>
#include <span>
#include <vector>

namespace fracspec::fourier {

struct SpectralValue {
    std::complex<double> value;
    double error_bound = 0.0;
};

/// Fourier transform of the natural Cantor measure,
///
///     nu^(xi) = prod_{j>=1} (1/N) sum_k exp(-i xi a_k eta_1 ... eta_{j-1}),
///
/// truncated at J factors. The residual conditional measure lives on an
/// interval of length L_J = eta_1 ... eta_J; it is replaced by a point mass at
/// the interval midpoint, so the error is at most |xi| L_J.
///
/// Measures use the probability normalization nu^(0) = 1.
class CantorTransform {
public:
    CantorTransform(const fractal::CantorParams& params, int J);

    SpectralValue operator()(double xi) const;
    int truncation() const noexcept { return static_cast<int>(scales_.size()); }
    double residual_length() const noexcept { return residual_length_; }

private:
    std::vector<double> points_;
    std::vector<double> scales_;  // eta_1 ... eta_{j-1} for j = 1..J
    double residual_length_;
};

SpectralValue cantor_fourier(const fractal::CantorParams& params, int J, double xi);

/// mu^ for mu = nu x ... x nu: the product of one-dimensional transforms.
SpectralValue product_measure_fourier(const CantorTransform& transform, std::span<const double> xi);
SpectralValue product_measure_fourier(const fractal::CantorParams& params, int J, std::span<const double> xi);

}  // namespace fracspec::fourier
