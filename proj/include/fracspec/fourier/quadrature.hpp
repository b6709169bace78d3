#pragma once

#include "fracspec/common/numeric.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracspec::fourier {

/// Composite 10-point Gauss-Legendre over `panels` equal panels, summed
/// pairwise so the result does not depend on evaluation order.
template <typename F>
double composite_gauss(F&& f, double a, double b, std::size_t panels) {
    if (!(b > a)) return 0.0;
    panels = std::max<std::size_t>(panels, 1);
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<double> parts(panels);
    for (std::size_t k = 0; k < panels; ++k) {
        const double lo = a + h * static_cast<double>(k);
        const double hi = (k + 1 == panels) ? b : lo + h;
        parts[k] = boost::math::quadrature::gauss<double, 10>::integrate(f, lo, hi);
    }
    return pairwise_sum(parts);
}

/// Panels of width at most `max_width`.
template <typename F>
double composite_gauss_width(F&& f, double a, double b, double max_width) {
    if (!(b > a)) return 0.0;
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_width));
    return composite_gauss(std::forward<F>(f), a, b, panels);
}

}  // namespace fracspec::fourier
