#include "fracspec/fourier/bump.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"
#include "fracspec/common/parallel.hpp"
#include "fracspec/fourier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fracspec::fourier {

namespace {

double bump_profile_raw(double t) noexcept {
    const double s = 1.0 - t * t;
    return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

}  // namespace

BumpFunction::BumpFunction(int n) : n_(n) {
    if (n < 1 || n > 4) throw DomainError("bump function supports 1 <= n <= 4");
    auto shell = [n](double r) { return bump_profile_raw(r) * std::pow(r, n - 1); };
    const double radial_integral = composite_gauss(shell, 0.0, 1.0, 256);
    const double area = n == 1 ? 2.0 : unit_sphere_area(n);
    c_ = 1.0 / (area * radial_integral);
}

double BumpFunction::radial(double t) const noexcept { return c_ * bump_profile_raw(std::abs(t)); }

double BumpFunction::operator()(std::span<const double> x) const noexcept {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    if (r2 >= 1.0) return 0.0;
    return c_ * std::exp(-1.0 / (1.0 - r2));
}

double BumpFunction::scaled(std::span<const double> x, double eps) const noexcept {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    r2 /= eps * eps;
    if (r2 >= 1.0) return 0.0;
    return c_ * std::exp(-1.0 / (1.0 - r2)) / std::pow(eps, n_);
}

double BumpFunction::fourier_radial(double rho) const {
    rho = std::abs(rho);
    if (rho == 0.0) return std::pow(2.0 * kPi, -0.5 * n_);
    std::function<double(double)> integrand;
    double prefactor = 1.0;
    if (n_ == 1) {
        integrand = [&](double r) { return radial(r) * std::cos(rho * r); };
        prefactor = 2.0 / std::sqrt(2.0 * kPi);
    } else {
        const double order = 0.5 * n_ - 1.0;
        integrand = [&, order](double r) { return radial(r) * std::cyl_bessel_j(order, rho * r) * std::pow(r, 0.5 * n_); };
        prefactor = std::pow(rho, 1.0 - 0.5 * n_);
    }
    const auto panels = static_cast<std::size_t>(std::max(32.0, std::ceil(rho / 2.0)));
    const double coarse = composite_gauss(integrand, 0.0, 1.0, panels);
    const double fine = composite_gauss(integrand, 0.0, 1.0, 2 * panels);
    // cancellation limits absolute accuracy to roundoff on the integral of |integrand|
    const double magnitude = composite_gauss([&](double r) { return std::abs(integrand(r)); }, 0.0, 1.0, 2 * panels);
    if (std::abs(fine - coarse) > 1e-10 * std::abs(fine) + 1e-13 * magnitude + 1e-15)
        throw PrecisionError("bump transform quadrature did not converge at rho = " + std::to_string(rho));
    return prefactor * fine;
}

DyadicProfile bump_profile(const BumpFunction& chi, double alpha, int j_min, int j_max, int samples_per_octave,
                           unsigned jobs) {
    const int n = chi.dim();
    if (!(alpha >= 0.0 && alpha < n)) throw DomainError("alpha must lie in [0, n)");
    if (j_max < j_min) throw DomainError("empty octave range");
    if (samples_per_octave < 2) throw DomainError("need at least two samples per octave");
    DyadicProfile out;
    out.n = n;
    out.alpha = alpha;
    out.j_min = j_min;
    out.j_max = j_max;
    out.samples_per_octave = samples_per_octave;
    const auto count = static_cast<std::size_t>(j_max - j_min + 1);
    out.a.resize(count);
    out.sup_abs_hat.resize(count);
    out.argmax.resize(count);

    parallel_for(count, jobs, [&](std::size_t idx) {
        const int j = j_min + static_cast<int>(idx);
        const double lo = std::ldexp(1.0, j), hi = std::ldexp(1.0, j + 1);
        const double step = (hi - lo) / samples_per_octave;
        double best = -1.0;
        int best_k = 0;
        for (int k = 0; k <= samples_per_octave; ++k) {
            const double v = std::abs(chi.fourier_radial(lo + step * k));
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
        // golden-section refinement of |chi^| on the bracket around the best sample
        double a = lo + step * std::max(0, best_k - 1);
        double b = lo + step * std::min(samples_per_octave, best_k + 1);
        double best_r = lo + step * best_k;
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - g * (b - a), x2 = a + g * (b - a);
        double f1 = std::abs(chi.fourier_radial(x1)), f2 = std::abs(chi.fourier_radial(x2));
        while (b - a > 1e-8 * b) {
            if (f1 > f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - g * (b - a);
                f1 = std::abs(chi.fourier_radial(x1));
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + g * (b - a);
                f2 = std::abs(chi.fourier_radial(x2));
            }
        }
        if (f1 > best) best = f1, best_r = x1;
        if (f2 > best) best = f2, best_r = x2;
        out.sup_abs_hat[idx] = best;
        out.argmax[idx] = best_r;
        out.a[idx] = std::pow(2.0, j * (n - alpha)) * best * best;
    });

    out.partial_sums.resize(count);
    for (std::size_t k = 0; k < count; ++k)
        out.partial_sums[k] = pairwise_sum(std::span<const double>(out.a.data(), k + 1));
    out.limit_estimate = out.partial_sums.back();
    out.cauchy_index = j_max + 1;
    for (int j = j_max; j >= j_min; --j) {
        if (out.at(j) >= out.cauchy_tol) break;
        out.cauchy_index = j;
    }
    return out;
}

}  // namespace fracspec::fourier
