#pragma once

#include "fracspec/tauberian/grid.hpp"

#include <functional>
#include <vector>

namespace fracspec::tauberian {

/// F(z, e^{i alpha_k}) on an m x m spatial grid times K equispaced angles.
struct AngularSamples {
    int m = 2;
    double cell = 1.0;
    int angles = 1;
    std::vector<std::vector<Complex>> values;  ///< values[k][flat z]

    double angle(int k) const noexcept;
    /// sqrt(sum |F|^2 cell^2 (2 pi / K)).
    double l2_norm() const;
};

struct AngularFamily {
    int m_min = 0;
    int m_max = 0;
    std::vector<GridFunction> components;  ///< f_m for m in [m_min, m_max]

    const GridFunction& at(int order) const { return components.at(static_cast<std::size_t>(order - m_min)); }
};

/// f_m(z) = (2 pi / K) sum_k F(z, alpha_k) e^{-i m alpha_k}. Needs K >= 2 max|m| + 1.
AngularFamily angular_decompose(const AngularSamples& F, int m_min, int m_max);

/// F(z, alpha) = (1 / 2 pi) sum_m f_m(z) e^{i m alpha} on the K angles.
AngularSamples resynthesize(const AngularFamily& family, int angles);

/// phi_m(z) = (2 pi / K) sum_k phi(e^{i alpha_k} z) e^{i order alpha_k}.
GridFunction rotated_component(const std::function<Complex(double, double)>& phi, int order, int m, double cell,
                               int angles);

struct PairResidual {
    double residual = 0.0;  ///< ||f_m * phi_m||_2
    double f_norm = 0.0;
    double phi_norm = 0.0;
};

PairResidual radial_pair_check(const GridFunction& f_m, const GridFunction& phi_m);

}  // namespace fracspec::tauberian
