#include "fracspec/tauberian/span.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracspec::tauberian {

double default_tolerance(double max_modulus) {
    return std::max(1e-9 * max_modulus, std::numeric_limits<double>::min());
}

ZeroSet dft_zero_set(const GridFunction& f, std::optional<double> tol) {
    if (tol && !(*tol > 0.0)) throw DomainError("zero tolerance must be positive");
    const auto spectrum = dft(f);
    ZeroSet z;
    z.moduli.resize(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        z.moduli[i] = std::abs(spectrum[i]);
        z.max_modulus = std::max(z.max_modulus, z.moduli[i]);
    }
    z.tol = tol ? *tol : default_tolerance(z.max_modulus);
    const auto m = static_cast<std::size_t>(f.m);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (z.moduli[i] >= z.tol) continue;
        if (f.n == 1)
            z.indices.push_back({static_cast<int>(i)});
        else
            z.indices.push_back({static_cast<int>(i / m), static_cast<int>(i % m)});
    }
    return z;
}

int span_dimension_oracle(const GridFunction& f, std::optional<double> tol) {
    if (f.n != 1) throw DomainError("span oracle is defined on Z_m");
    const auto z = dft_zero_set(f, tol);
    return f.m - static_cast<int>(z.indices.size());
}

int circulant_rank(const GridFunction& f, std::optional<double> tol) {
    f.validate();
    if (f.n != 1) throw DomainError("circulant rank is defined on Z_m");
    const int m = f.m;
    Eigen::MatrixXcd c(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c(i, j) = f.values[static_cast<std::size_t>(((i - j) % m + m) % m)];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
    const auto& s = svd.singularValues();
    double threshold;
    if (tol) {
        threshold = std::sqrt(static_cast<double>(m)) * *tol;
    } else {
        // the largest singular value is sqrt(m) max |f^|
        threshold = default_tolerance(s.size() ? s(0) : 0.0);
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) >= threshold) ++rank;
    return rank;
}

Annihilator annihilator_residual(const GridFunction& f, std::optional<double> tol) {
    if (f.n != 1) throw DomainError("annihilator residual is defined on Z_m");
    const auto z = dft_zero_set(f, tol);
    Annihilator out;
    out.tol = z.tol;
    const auto it = std::min_element(z.moduli.begin(), z.moduli.end());
    out.frequency = static_cast<int>(it - z.moduli.begin());
    out.min_modulus = *it;
    out.residual = std::sqrt(static_cast<double>(f.m)) * out.min_modulus;
    if (out.min_modulus < out.tol) {
        std::vector<Complex> h(static_cast<std::size_t>(f.m));
        const double norm = 1.0 / std::sqrt(static_cast<double>(f.m));
        for (int x = 0; x < f.m; ++x) {
            const double phase = 2.0 * kPi * static_cast<double>((static_cast<long>(out.frequency) * x) % f.m) / f.m;
            h[static_cast<std::size_t>(x)] = std::polar(norm, phase);
        }
        out.witness = std::move(h);
    }
    return out;
}

}  // namespace fracspec::tauberian
