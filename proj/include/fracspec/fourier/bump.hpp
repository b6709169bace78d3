#pragma once

#include <span>
#include <vector>

namespace fracspec::fourier {

/// The standard mollifier chi(x) = c exp(-1/(1 - |x|^2)) on the open unit
/// ball of R^n, normalized to unit integral. Even and radial.
class BumpFunction {
public:
    explicit BumpFunction(int n);

    int dim() const noexcept { return n_; }
    double normalization() const noexcept { return c_; }

    double radial(double t) const noexcept;
    double operator()(std::span<const double> x) const noexcept;

    /// chi_eps(x) = eps^-n chi(x / eps).
    double scaled(std::span<const double> x, double eps) const noexcept;

    /// Radial Fourier transform with the (2 pi)^(-n/2) convention:
    ///     chi^(rho) = rho^(1 - n/2) int_0^1 chi(r) J_{n/2-1}(rho r) r^(n/2) dr.
    /// Throws PrecisionError when panel doubling changes the value by more
    /// than 1e-10 relative plus 1e-13 of the integral of |integrand|.
    double fourier_radial(double rho) const;

private:
    int n_;
    double c_;
};

/// a_j = 2^{j(n - alpha)} sup_{2^j <= |x| <= 2^{j+1}} |chi^(x)|^2 for j in [j_min, j_max].
struct DyadicProfile {
    int n = 1;
    double alpha = 0.0;
    int j_min = 0;
    int j_max = 0;
    std::vector<double> a;
    std::vector<double> sup_abs_hat;  ///< sup |chi^| per octave
    std::vector<double> argmax;       ///< radius attaining it
    std::vector<double> partial_sums;
    double limit_estimate = 0.0;
    /// Smallest j such that a_{j'} < cauchy_tol for every j' >= j in range.
    int cauchy_index = 0;
    double cauchy_tol = 1e-8;
    int samples_per_octave = 64;

    double at(int j) const { return a.at(static_cast<std::size_t>(j - j_min)); }
};

DyadicProfile bump_profile(const BumpFunction& chi, double alpha, int j_min, int j_max,
                           int samples_per_octave = 64, unsigned jobs = 1);

}  // namespace fracspec::fourier
