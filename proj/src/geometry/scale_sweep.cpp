#include "fracspec/geometry/scale_sweep.hpp"

#include "fracspec/common/errors.hpp"

#include <cmath>

namespace fracspec::geometry {

void ScaleSweep::validate() const {
    if (!(eps_max > 0.0) || !std::isfinite(eps_max)) throw DomainError("sweep eps_max must be positive");
    if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("sweep ratio must lie in (0, 1)");
    if (count < 1) throw DomainError("sweep count must be positive");
}

std::vector<double> ScaleSweep::scales() const {
    validate();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(eps_max * std::pow(ratio, k));
    return out;
}

}  // namespace fracspec::geometry
