#include "fracspec/fourier/mollifier.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"
#include "fracspec/common/parallel.hpp"
#include "fracspec/fourier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fracspec::fourier {

RadialFunction RadialFunction::bessel_surrogate(double r_min, double r_max, double p) {
    RadialFunction f;
    f.profile = [](double r) { return std::sqrt(2.0 / (kPi * r)) * std::cos(r - 0.25 * kPi); };
    f.r_min = r_min;
    f.r_max = r_max;
    f.p = p;
    std::ostringstream label;
    label << "bessel-surrogate on [" << r_min << ", " << r_max << "], zero outside";
    f.label = label.str();
    return f;
}

RadialFunction RadialFunction::zero(double r_max, double p) {
    RadialFunction f;
    f.profile = [](double) { return 0.0; };
    f.r_min = 0.0;
    f.r_max = r_max;
    f.p = p;
    f.label = "zero";
    return f;
}

namespace {

double shell_integral(const RadialFunction& f, int n, double power, double lo, double hi, double width) {
    lo = std::max(lo, f.r_min);
    hi = std::min(hi, f.r_max);
    if (!(hi > lo)) return 0.0;
    const double area = unit_sphere_area(n);
    auto integrand = [&](double r) { return area * std::pow(std::abs(f.profile(r)), power) * std::pow(r, n - 1); };
    return composite_gauss_width(integrand, lo, hi, width);
}

}  // namespace

MollifierSweep mollifier_sum(const RadialFunction& f, const DyadicProfile& profile, std::span<const double> eps_schedule,
                             double panel_width, unsigned jobs) {
    const int n = profile.n;
    const double alpha = profile.alpha;
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("mollifier sweep needs 0 < alpha < n");
    if (!(f.p >= 2.0)) throw DomainError("the Hoelder bound needs p >= 2");
    if (!(f.r_max > f.r_min && f.r_min >= 0.0)) throw DomainError("radial sample range is empty");
    if (eps_schedule.empty()) throw DomainError("empty eps schedule");
    for (std::size_t e = 0; e < eps_schedule.size(); ++e) {
        if (!(eps_schedule[e] > 0.0)) throw DomainError("eps values must be positive");
        if (e > 0 && !(eps_schedule[e] < eps_schedule[e - 1])) throw DomainError("eps schedule must be decreasing");
    }

    MollifierSweep out;
    out.n = n;
    out.alpha = alpha;
    out.p = f.p;
    out.eps.assign(eps_schedule.begin(), eps_schedule.end());
    out.j_min = profile.j_min;
    out.j_max = profile.j_max;
    out.a = profile.a;
    const std::size_t nj = profile.a.size(), ne = out.eps.size();
    out.b.assign(ne, std::vector<double>(nj, 0.0));
    out.a_times_b.assign(ne, std::vector<double>(nj, 0.0));
    out.sums.assign(ne, 0.0);

    out.f_p_norm = std::pow(shell_integral(f, n, f.p, f.r_min, f.r_max, panel_width), 1.0 / f.p);
    out.f_in_l2_on_range = std::isfinite(shell_integral(f, n, 2.0, f.r_min, f.r_max, panel_width));

    const double ball = unit_ball_volume(n);
    std::vector<std::vector<double>> cell_constant(ne, std::vector<double>(nj, 0.0));
    std::vector<std::vector<double>> holder_cell(ne, std::vector<double>(nj, 0.0));
    parallel_for(ne, jobs, [&](std::size_t e) {
        const double eps = out.eps[e];
        for (std::size_t k = 0; k < nj; ++k) {
            const int j = profile.j_min + static_cast<int>(k);
            const double inner = std::ldexp(1.0, j) / eps, outer = 2.0 * inner;
            const double weight = std::pow(std::ldexp(1.0, -j) * eps, n - alpha);
            const double b = weight * shell_integral(f, n, 2.0, inner, outer, panel_width);
            const double shell_volume = ball * (std::pow(outer, n) - std::pow(inner, n));
            const double c = weight * std::pow(shell_volume, 1.0 - 2.0 / f.p);
            const double lp_mass = shell_integral(f, n, f.p, inner, outer, panel_width);
            out.b[e][k] = b;
            out.a_times_b[e][k] = profile.a[k] * b;
            cell_constant[e][k] = c;
            holder_cell[e][k] = c * std::pow(lp_mass, 2.0 / f.p);
        }
        out.sums[e] = pairwise_sum(out.a_times_b[e]);
    });

    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t k = 0; k < nj; ++k) out.holder_constant = std::max(out.holder_constant, cell_constant[e][k]);
    const double global = out.holder_constant * out.f_p_norm * out.f_p_norm;
    for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t k = 0; k < nj; ++k) {
            const double b = out.b[e][k];
            // cell-level Hoelder first, then the uniform constant
            if (b > holder_cell[e][k] * (1.0 + 1e-9) + 1e-300) out.uniform_bound_holds = false;
            if (global > 0.0) out.worst_bound_ratio = std::max(out.worst_bound_ratio, b / global);
            if (b > global * (1.0 + 1e-9) + 1e-300) out.uniform_bound_holds = false;
        }
    }

    out.fixed_j_vanishing.assign(nj, false);
    out.fixed_j_tail_monotone.assign(nj, true);
    for (std::size_t k = 0; k < nj; ++k) {
        const int j = profile.j_min + static_cast<int>(k);
        out.fixed_j_vanishing[k] = out.b[ne - 1][k] == 0.0;
        std::size_t start = ne;
        for (std::size_t e = 0; e < ne; ++e) {
            if (std::ldexp(2.0, j) / out.eps[e] > f.r_max) {
                start = e;
                break;
            }
        }
        for (std::size_t e = start; e + 1 < ne; ++e)
            if (out.b[e + 1][k] > out.b[e][k] * (1.0 + 1e-12)) out.fixed_j_tail_monotone[k] = false;
    }

    const auto peak = static_cast<std::size_t>(std::max_element(out.sums.begin(), out.sums.end()) - out.sums.begin());
    out.sums_decreasing_after_transient = true;
    for (std::size_t e = peak; e + 1 < ne; ++e)
        if (out.sums[e + 1] > out.sums[e] * (1.0 + 1e-12)) out.sums_decreasing_after_transient = false;
    out.final_over_initial = out.sums.front() > 0.0 ? out.sums.back() / out.sums.front() : 0.0;
    return out;
}

void write_mollifier_csv(std::ostream& out, const MollifierSweep& sweep) {
    out << "eps,j,b,a,product\n" << std::setprecision(17);
    for (std::size_t e = 0; e < sweep.eps.size(); ++e)
        for (std::size_t k = 0; k < sweep.a.size(); ++k)
            out << sweep.eps[e] << ',' << sweep.j_min + static_cast<int>(k) << ',' << sweep.b[e][k] << ','
                << sweep.a[k] << ',' << sweep.a_times_b[e][k] << '\n';
}

double TestFunction::operator()(std::span<const double> x) const noexcept {
    double r2 = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double v = x[d] - center[d];
        r2 += v * v;
    }
    r2 /= scale * scale;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

PairingResult mollified_pairing(const geometry::WeightedMeasure& u, const TestFunction& psi, const BumpFunction& chi,
                                double eps, double grid_step) {
    const int n = u.dim();
    if (chi.dim() != n || static_cast<int>(psi.center.size()) != n)
        throw DomainError("measure, mollifier and test function differ in dimension");
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    if (!(psi.scale > 0.0)) throw DomainError("test function scale must be positive");
    const double h = grid_step > 0.0 ? grid_step : eps / 16.0;
    if (h < 1e-4 * eps) throw SizeError("pairing grid finer than 1e-4 eps refused");
    const auto per_axis = static_cast<std::size_t>(std::ceil(2.0 * psi.scale / h));
    double total = 1.0;
    for (int d = 0; d < n; ++d) total *= static_cast<double>(per_axis);
    if (total > 2e8) throw SizeError("pairing grid exceeds 2e8 points");

    PairingResult out;
    out.grid_step = h;
    out.grid_points = static_cast<std::size_t>(total);
    std::vector<double> lo(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) lo[static_cast<std::size_t>(d)] = psi.center[static_cast<std::size_t>(d)] - psi.scale;

    std::vector<double> field(out.grid_points, 0.0);
    std::vector<std::uint8_t> touched(out.grid_points, 0);
    std::vector<double> x(static_cast<std::size_t>(n)), diff(static_cast<std::size_t>(n));
    std::vector<std::ptrdiff_t> first(static_cast<std::size_t>(n)), last(static_cast<std::size_t>(n)), idx(static_cast<std::size_t>(n));
    const auto axis = static_cast<std::ptrdiff_t>(per_axis);

    std::vector<double> limit_terms;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto a = u.atom(i);
        const double w = u.weight(i);
        limit_terms.push_back(w * psi(a));
        bool empty = false;
        for (int d = 0; d < n; ++d) {
            const auto D = static_cast<std::size_t>(d);
            first[D] = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(std::floor((a[D] - eps - lo[D]) / h - 0.5)));
            last[D] = std::min<std::ptrdiff_t>(axis - 1, static_cast<std::ptrdiff_t>(std::ceil((a[D] + eps - lo[D]) / h - 0.5)));
            if (first[D] > last[D]) empty = true;
        }
        if (empty) continue;
        idx = first;
        while (true) {
            std::size_t flat = 0;
            double r2 = 0.0;
            for (int d = 0; d < n; ++d) {
                const auto D = static_cast<std::size_t>(d);
                x[D] = lo[D] + (static_cast<double>(idx[D]) + 0.5) * h;
                diff[D] = x[D] - a[D];
                r2 += diff[D] * diff[D];
                flat = flat * per_axis + static_cast<std::size_t>(idx[D]);
            }
            if (r2 < eps * eps) {
                field[flat] += w * chi.scaled(diff, eps);
                touched[flat] = 1;
            }
            int d = n - 1;
            for (; d >= 0; --d) {
                const auto D = static_cast<std::size_t>(d);
                if (++idx[D] <= last[D]) break;
                idx[D] = first[D];
            }
            if (d < 0) break;
        }
    }

    const double cell = std::pow(h, n);
    std::vector<double> pair_terms, u_terms, psi_terms;
    std::vector<std::size_t> digits(static_cast<std::size_t>(n));
    for (std::size_t flat = 0; flat < out.grid_points; ++flat) {
        if (!touched[flat]) continue;
        std::size_t rest = flat;
        for (int d = n - 1; d >= 0; --d) {
            const auto D = static_cast<std::size_t>(d);
            x[D] = lo[D] + (static_cast<double>(rest % per_axis) + 0.5) * h;
            rest /= per_axis;
        }
        const double pv = psi(x);
        pair_terms.push_back(field[flat] * pv * cell);
        u_terms.push_back(field[flat] * field[flat] * cell);
        psi_terms.push_back(pv * pv * cell);
    }
    out.pairing = pairwise_sum(pair_terms);
    out.u_norm = std::sqrt(pairwise_sum(u_terms));
    out.psi_norm_on_fattened = std::sqrt(pairwise_sum(psi_terms));
    out.bound = out.u_norm * out.psi_norm_on_fattened;
    out.limit_value = pairwise_sum(limit_terms);
    return out;
}

}  // namespace fracspec::fourier
