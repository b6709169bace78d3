#include "fracspec/tauberian/angular.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fracspec::tauberian {

double AngularSamples::angle(int k) const noexcept { return 2.0 * kPi * k / angles; }

double AngularSamples::l2_norm() const {
    std::vector<double> terms;
    for (const auto& slice : values)
        for (const auto& v : slice) terms.push_back(std::norm(v));
    return std::sqrt(pairwise_sum(terms) * cell * cell * 2.0 * kPi / angles);
}

AngularFamily angular_decompose(const AngularSamples& F, int m_min, int m_max) {
    if (m_min > m_max) throw DomainError("empty angular order range");
    if (F.angles < 1 || static_cast<int>(F.values.size()) != F.angles) throw DomainError("angular sample count mismatch");
    const int widest = std::max(std::abs(m_min), std::abs(m_max));
    if (F.angles < 2 * widest + 1) throw DomainError("angular grid too coarse: aliasing between orders");
    const auto points = static_cast<std::size_t>(F.m) * static_cast<std::size_t>(F.m);
    for (const auto& slice : F.values)
        if (slice.size() != points) throw DomainError("angular slice size does not match the spatial grid");

    AngularFamily family;
    family.m_min = m_min;
    family.m_max = m_max;
    const double weight = 2.0 * kPi / F.angles;
    for (int order = m_min; order <= m_max; ++order) {
        GridFunction f(F.m, 2, F.cell);
        for (int k = 0; k < F.angles; ++k) {
            const long reduced = ((static_cast<long>(order) * k) % F.angles + F.angles) % F.angles;
            const Complex phase = std::polar(weight, -2.0 * kPi * static_cast<double>(reduced) / F.angles);
            const auto& slice = F.values[static_cast<std::size_t>(k)];
            for (std::size_t z = 0; z < points; ++z) f.values[z] += slice[z] * phase;
        }
        family.components.push_back(std::move(f));
    }
    return family;
}

AngularSamples resynthesize(const AngularFamily& family, int angles) {
    if (family.components.empty()) throw DomainError("empty angular family");
    AngularSamples F;
    F.m = family.components.front().m;
    F.cell = family.components.front().cell;
    F.angles = angles;
    const auto points = family.components.front().values.size();
    F.values.assign(static_cast<std::size_t>(angles), std::vector<Complex>(points));
    for (int k = 0; k < angles; ++k) {
        auto& slice = F.values[static_cast<std::size_t>(k)];
        for (int order = family.m_min; order <= family.m_max; ++order) {
            const long reduced = ((static_cast<long>(order) * k) % angles + angles) % angles;
            const Complex phase = std::polar(1.0 / (2.0 * kPi), 2.0 * kPi * static_cast<double>(reduced) / angles);
            const auto& f = family.at(order).values;
            for (std::size_t z = 0; z < points; ++z) slice[z] += f[z] * phase;
        }
    }
    return F;
}

GridFunction rotated_component(const std::function<Complex(double, double)>& phi, int order, int m, double cell,
                               int angles) {
    if (angles < 2 * std::abs(order) + 1) throw DomainError("angular grid too coarse: aliasing between orders");
    GridFunction out(m, 2, cell);
    const double weight = 2.0 * kPi / angles;
    for (int k = 0; k < angles; ++k) {
        const double a = 2.0 * kPi * k / angles;
        const double c = std::cos(a), s = std::sin(a);
        const long reduced = ((static_cast<long>(order) * k) % angles + angles) % angles;
        const Complex phase = std::polar(weight, 2.0 * kPi * static_cast<double>(reduced) / angles);
        for (int i = 0; i < m; ++i) {
            const double x = out.coordinate(i);
            for (int j = 0; j < m; ++j) {
                const double y = out.coordinate(j);
                out.at(i, j) += phi(c * x - s * y, s * x + c * y) * phase;
            }
        }
    }
    return out;
}

PairResidual radial_pair_check(const GridFunction& f_m, const GridFunction& phi_m) {
    PairResidual out;
    out.residual = convolve(f_m, phi_m).l2_norm();
    out.f_norm = f_m.l2_norm();
    out.phi_norm = phi_m.l2_norm();
    return out;
}

}  // namespace fracspec::tauberian
