#include "fracspec/tauberian/grid.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"

#include <fftw3.h>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace fracspec::tauberian {

namespace {

std::mutex& planner_mutex() {
    static std::mutex mutex;
    return mutex;
}

// Unnormalized transform; sign -1 forward, +1 backward.
std::vector<Complex> raw_transform(int m, int n, std::vector<Complex> data, int sign) {
    std::vector<Complex> out(data.size());
    auto* in_ptr = reinterpret_cast<fftw_complex*>(data.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = n == 1 ? fftw_plan_dft_1d(m, in_ptr, out_ptr, sign, FFTW_ESTIMATE)
                      : fftw_plan_dft_2d(m, m, in_ptr, out_ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::size_t grid_size(int m, int n) {
    return n == 1 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
}

}  // namespace

GridFunction::GridFunction(int m_, int n_, double cell_) : m(m_), n(n_), cell(cell_) {
    if (m < 2 || (n != 1 && n != 2)) throw DomainError("grid needs m >= 2 and n in {1,2}");
    values.assign(grid_size(m, n), Complex{});
}

GridFunction::GridFunction(int m_, int n_, double cell_, std::vector<Complex> values_)
    : m(m_), n(n_), cell(cell_), values(std::move(values_)) {
    validate();
}

void GridFunction::validate() const {
    if (m < 2) throw DomainError("grid needs m >= 2");
    if (n != 1 && n != 2) throw DomainError("grid dimension must be 1 or 2");
    if (!(cell > 0.0) || !std::isfinite(cell)) throw DomainError("cell size must be positive");
    if (values.size() != grid_size(m, n)) throw DomainError("grid value count does not match m^n");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("grid values must be finite");
}

double GridFunction::l2_norm() const {
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = std::norm(values[i]);
    return std::sqrt(pairwise_sum(terms) * std::pow(cell, n));
}

std::vector<Complex> dft(const GridFunction& f) {
    f.validate();
    auto out = raw_transform(f.m, f.n, f.values, FFTW_FORWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<Complex> inverse_dft(int m, int n, const std::vector<Complex>& spectrum) {
    if (spectrum.size() != grid_size(m, n)) throw DomainError("spectrum size does not match m^n");
    auto out = raw_transform(m, n, spectrum, FFTW_BACKWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (auto& v : out) v *= scale;
    return out;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    f.validate();
    g.validate();
    if (f.m != g.m || f.n != g.n || f.cell != g.cell) throw DomainError("convolution needs matching grids");
    auto a = raw_transform(f.m, f.n, f.values, FFTW_FORWARD);
    const auto b = raw_transform(g.m, g.n, g.values, FFTW_FORWARD);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    auto c = raw_transform(f.m, f.n, std::move(a), FFTW_BACKWARD);
    const double scale = std::pow(f.cell, f.n) / static_cast<double>(c.size());
    for (auto& v : c) v *= scale;
    // both inputs are centered, so the raw product is shifted by m/2 per axis
    GridFunction out(f.m, f.n, f.cell);
    const int shift = f.m / 2;
    if (f.n == 1) {
        for (int i = 0; i < f.m; ++i) out.at(i) = c[static_cast<std::size_t>((i + shift) % f.m)];
    } else {
        for (int i = 0; i < f.m; ++i)
            for (int j = 0; j < f.m; ++j) out.at(i, j) = c[out.flat((i + shift) % f.m, (j + shift) % f.m)];
    }
    return out;
}

void write_grid_header(std::ostream& out, const GridFunction& f) {
    nlohmann::json header{{"m", f.m}, {"n", f.n}, {"cell", f.cell}};
    out << header.dump() << '\n';
}

void write_grid_csv(std::ostream& out, const GridFunction& f) {
    out << "index,re,im\n" << std::setprecision(17);
    for (std::size_t i = 0; i < f.values.size(); ++i) out << i << ',' << f.values[i].real() << ',' << f.values[i].imag() << '\n';
}

GridFunction read_grid(std::istream& header, std::istream& csv) {
    nlohmann::json h;
    try {
        header >> h;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("grid header: ") + e.what());
    }
    GridFunction f(h.at("m").get<int>(), h.at("n").get<int>(), h.at("cell").get<double>());
    std::string line;
    std::getline(csv, line);
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::size_t index = 0;
        double re = 0.0, im = 0.0;
        char c1 = 0, c2 = 0;
        if (!(row >> index >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',' || index >= f.values.size())
            throw ConfigError("bad grid row: " + line);
        f.values[index] = {re, im};
        ++rows;
    }
    if (rows != f.values.size()) throw ConfigError("grid CSV row count does not match header");
    f.validate();
    return f;
}

}  // namespace fracspec::tauberian
