#pragma once

#include "fracspec/fourier/bump.hpp"
#include "fracspec/geometry/measure.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fracspec::fourier {

/// A radial function on R^n known through its profile on [r_min, r_max];
/// it is taken to vanish outside that range.
struct RadialFunction {
    std::function<double(double)> profile;
    double r_min = 0.0;
    double r_max = 1.0;
    double p = 2.0;  ///< declared Lebesgue exponent
    std::string label;

    /// The large-|x| asymptotic of J_0 in the plane: (2/(pi r))^(1/2) cos(r - pi/4).
    static RadialFunction bessel_surrogate(double r_min, double r_max, double p);
    static RadialFunction zero(double r_max, double p);
};

struct MollifierSweep {
    int n = 1;
    double alpha = 0.0;
    double p = 2.0;
    std::vector<double> eps;  ///< schedule, as given (decreasing)
    int j_min = 0;
    int j_max = 0;
    /// b[e][j - j_min] = (2^-j eps)^(n-alpha) int_{2^j <= |eps x| <= 2^{j+1}} |f|^2
    std::vector<std::vector<double>> b;
    std::vector<std::vector<double>> a_times_b;
    std::vector<double> sums;  ///< sum_j a_j b_j^eps per eps

    double f_p_norm = 0.0;         ///< ||f||_p over the sampled range
    double holder_constant = 0.0;  ///< C in b_j^eps <= C ||f||_p^2 (max over cells)
    bool uniform_bound_holds = true;
    double worst_bound_ratio = 0.0;  ///< max b / (C ||f||_p^2)

    /// Per j: b vanishes at the end of the schedule (shell left the support).
    std::vector<bool> fixed_j_vanishing;
    /// Per j: b is non-increasing once the shell starts leaving the support.
    std::vector<bool> fixed_j_tail_monotone;
    bool sums_decreasing_after_transient = false;
    double final_over_initial = 0.0;
    bool f_in_l2_on_range = true;
    std::vector<double> a;  ///< a_j from the profile
};

/// Shell integrals of |f|^2, their weighted sum against the bump profile,
/// and the Hoelder bound per cell. The profile fixes n, alpha and the j range.
MollifierSweep mollifier_sum(const RadialFunction& f, const DyadicProfile& profile, std::span<const double> eps_schedule,
                             double panel_width = 0.25, unsigned jobs = 1);

/// CSV columns: eps, j, b, a, product.
void write_mollifier_csv(std::ostream& out, const MollifierSweep& sweep);

/// psi(x) = exp(1 - 1/(1 - |x - c|^2 / s^2)) inside the ball B_s(c); psi(c) = 1.
struct TestFunction {
    std::vector<double> center;
    double scale = 1.0;

    double operator()(std::span<const double> x) const noexcept;
};

struct PairingResult {
    double pairing = 0.0;         ///< <u_eps, psi>
    double bound = 0.0;           ///< ||u_eps||_2 ||psi 1_{S(eps)}||_2, norms over supp psi
    double u_norm = 0.0;
    double psi_norm_on_fattened = 0.0;
    double limit_value = 0.0;     ///< sum_atoms w psi(atom), the eps -> 0 limit
    double grid_step = 0.0;
    std::size_t grid_points = 0;
};

/// Mollified pairing on a midpoint grid over the cube around supp psi.
/// grid_step <= 0 selects eps / 16. Steps finer than 1e-4 eps are refused.
PairingResult mollified_pairing(const geometry::WeightedMeasure& u, const TestFunction& psi, const BumpFunction& chi,
                                double eps, double grid_step = 0.0);

}  // namespace fracspec::fourier
