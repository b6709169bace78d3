#include "fracspec/fourier/cantor_fourier.hpp"

#include "fracspec/common/errors.hpp"

#include <cmath>

namespace fracspec::fourier {

CantorTransform::CantorTransform(const fractal::CantorParams& params, int J) {
    fractal::require_valid(params);
    if (J < 1) throw DomainError("truncation level must be >= 1");
    for (const auto& a : params.points) points_.push_back(to_double(a));
    Rational scale = 1;
    for (int j = 1; j <= J; ++j) {
        scales_.push_back(to_double(scale));
        scale *= params.eta_at(j);
    }
    residual_length_ = to_double(scale);
}

SpectralValue CantorTransform::operator()(double xi) const {
    std::complex<double> product = 1.0;
    const double inv_n = 1.0 / static_cast<double>(points_.size());
    for (double s : scales_) {
        std::complex<double> factor = 0.0;
        const double t = xi * s;
        for (double a : points_) factor += std::polar(1.0, -t * a);
        product *= factor * inv_n;
    }
    product *= std::polar(1.0, -0.5 * xi * residual_length_);
    return {product, std::abs(xi) * residual_length_};
}

SpectralValue cantor_fourier(const fractal::CantorParams& params, int J, double xi) {
    return CantorTransform(params, J)(xi);
}

SpectralValue product_measure_fourier(const CantorTransform& transform, std::span<const double> xi) {
    SpectralValue out{1.0, 0.0};
    // |prod z_k - prod w_k| <= sum_k |z_k - w_k| when all moduli are <= 1.
    for (double x : xi) {
        const auto v = transform(x);
        out.value *= v.value;
        out.error_bound += v.error_bound;
    }
    return out;
}

SpectralValue product_measure_fourier(const fractal::CantorParams& params, int J, std::span<const double> xi) {
    return product_measure_fourier(CantorTransform(params, J), xi);
}

}  // namespace fracspec::fourier
