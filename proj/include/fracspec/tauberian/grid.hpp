#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

namespace fracspec::tauberian {

using Complex = std::complex<double>;

/// Samples on the torus Z_m^n (n = 1 or 2), row-major for n = 2.
/// Spatial index i sits at coordinate (i - m/2) * cell on each axis.
struct GridFunction {
    int m = 2;
    int n = 1;
    double cell = 1.0;
    std::vector<Complex> values;

    GridFunction() = default;
    GridFunction(int m, int n, double cell);
    GridFunction(int m, int n, double cell, std::vector<Complex> values);

    std::size_t size() const noexcept { return values.size(); }
    Complex& at(int i, int j = 0) { return values[flat(i, j)]; }
    const Complex& at(int i, int j = 0) const { return values[flat(i, j)]; }
    std::size_t flat(int i, int j = 0) const noexcept {
        return n == 1 ? static_cast<std::size_t>(i) : static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
    }
    double coordinate(int i) const noexcept { return (i - m / 2) * cell; }

    /// Checks m >= 2, n in {1,2}, cell > 0, matching size, finite entries.
    void validate() const;

    /// sqrt(sum |v|^2 cell^n).
    double l2_norm() const;
};

/// Centered frequency index: k for k < m/2, else k - m.
inline int centered(int k, int m) noexcept { return k < (m + 1) / 2 ? k : k - m; }

/// Unitary DFT: F(k) = m^(-n/2) sum_x f(x) exp(-2 pi i k.x / m), indices uncentered.
std::vector<Complex> dft(const GridFunction& f);
std::vector<Complex> inverse_dft(int m, int n, const std::vector<Complex>& spectrum);

/// Circular convolution sum_w f(w) g(z - w) cell^n (both on the same grid).
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// Header {"m","n","cell"} as JSON; body as CSV rows index,re,im.
void write_grid_header(std::ostream& out, const GridFunction& f);
void write_grid_csv(std::ostream& out, const GridFunction& f);
GridFunction read_grid(std::istream& header, std::istream& csv);

}  // namespace fracspec::tauberian
