#include "doctest.h"
#include "oracles.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/tauberian/angular.hpp"
#include "fracspec/tauberian/grid.hpp"
#include "fracspec/tauberian/span.hpp"
#include "fracspec/tauberian/spherical.hpp"
#include "fracspec/tauberian/verdict.hpp"

#include <json.hpp>

#include <cmath>
#include <random>
#include <sstream>

using namespace fracspec;
using namespace fracspec::tauberian;

namespace {

GridFunction random_grid(int m, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    GridFunction f(m, n, 1.0);
    for (auto& v : f.values) v = Complex(g(rng), g(rng));
    return f;
}

GridFunction basis(int m, int i) {
    GridFunction f(m, 1, 1.0);
    f.at(i) = 1.0;
    return f;
}

// Spectrum set directly on the centered frequency lattice, then inverted.
GridFunction from_spectrum(int m, const std::function<Complex(int, int)>& spectrum) {
    std::vector<Complex> s(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            s[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] =
                spectrum(centered(a, m), centered(b, m));
    return GridFunction(m, 2, 1.0, inverse_dft(m, 2, s));
}

const double kBeta = std::log(2.0) / std::log(3.0);

}  // namespace

TEST_CASE("zero sets of simple signals") {
    const int m = 8;
    const auto delta = basis(m, 0);
    CHECK(dft_zero_set(delta).indices.empty());
    CHECK(span_dimension_oracle(delta) == m);

    GridFunction constant(m, 1, 1.0);
    for (auto& v : constant.values) v = 1.0;
    CHECK(dft_zero_set(constant).indices.size() == static_cast<std::size_t>(m - 1));
    CHECK(span_dimension_oracle(constant) == 1);

    auto diff = basis(m, 0);
    diff.at(1) = -1.0;
    const auto z = dft_zero_set(diff);
    REQUIRE(z.indices.size() == 1u);
    CHECK(z.indices[0] == std::vector<int>{0});
    CHECK(span_dimension_oracle(diff) == m - 1);
}

TEST_CASE("FFTW transform against the defining sum") {
    for (int m : {5, 8, 16}) {
        const auto f = random_grid(m, 1, static_cast<std::uint64_t>(m));
        const auto fast = dft(f);
        const auto slow = oracle::direct_dft(f.values);
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-12);
        const auto back = inverse_dft(m, 1, fast);
        for (std::size_t k = 0; k < back.size(); ++k) CHECK(std::abs(back[k] - f.values[k]) < 1e-12);
    }
    // 2-D transform is the 1-D transform along rows then columns.
    const int m = 6;
    const auto f = random_grid(m, 2, 3);
    const auto fast = dft(f);
    std::vector<Complex> rows(f.values.size());
    for (int i = 0; i < m; ++i) {
        std::vector<Complex> r(f.values.begin() + i * m, f.values.begin() + (i + 1) * m);
        const auto t = oracle::direct_dft(r);
        std::copy(t.begin(), t.end(), rows.begin() + i * m);
    }
    for (int j = 0; j < m; ++j) {
        std::vector<Complex> c(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i * m + j)];
        const auto t = oracle::direct_dft(c);
        for (int i = 0; i < m; ++i) CHECK(std::abs(fast[static_cast<std::size_t>(i * m + j)] - t[static_cast<std::size_t>(i)]) < 1e-12);
    }
}

TEST_CASE("span dimension matches the circulant rank") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 1.1);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    for (int m : {8, 16, 32}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Complex> s(static_cast<std::size_t>(m));
            int zeros = 0;
            for (auto& v : s) {
                if (rng() % 3 == 0) {
                    ++zeros;
                    continue;
                }
                v = std::polar(u(rng), phase(rng));
            }
            const GridFunction f(m, 1, 1.0, inverse_dft(m, 1, s));
            CHECK(span_dimension_oracle(f) == m - zeros);
            CHECK(circulant_rank(f) == m - zeros);
        }
    }
    CHECK(circulant_rank(basis(8, 3)) == 8);
}

TEST_CASE("annihilator witness") {
    const int m = 16;
    std::vector<Complex> s(static_cast<std::size_t>(m), 1.0);
    s[5] = 0.0;
    const GridFunction f(m, 1, 1.0, inverse_dft(m, 1, s));
    const auto a = annihilator_residual(f);
    CHECK(a.frequency == 5);
    CHECK(a.residual < 1e-12);
    REQUIRE(a.witness.has_value());
    CHECK(oracle::l2(*a.witness) == doctest::Approx(1.0));
    CHECK(oracle::l2(oracle::circular_convolution(*a.witness, f.values)) < 1e-10);

    // Residual is the minimum over unit characters, found by brute force.
    const auto g = random_grid(m, 1, 21);
    const auto b = annihilator_residual(g);
    double best = 1e300;
    for (int k = 0; k < m; ++k) {
        std::vector<Complex> h(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x) h[static_cast<std::size_t>(x)] = std::polar(1.0 / std::sqrt(m), 2.0 * M_PI * k * x / m);
        best = std::min(best, oracle::l2(oracle::circular_convolution(h, g.values)));
    }
    CHECK(b.residual == doctest::Approx(best).epsilon(1e-10));
    CHECK_FALSE(b.witness.has_value());
}

TEST_CASE("centered convolution") {
    const int m = 12;
    const double cell = 0.5;
    auto f = random_grid(m, 1, 4), g = random_grid(m, 1, 5);
    f.cell = g.cell = cell;
    const auto c = convolve(f, g);
    for (int i = 0; i < m; ++i) {
        Complex s = 0.0;
        for (int a = 0; a < m; ++a) s += f.at(a) * g.at(((i - a + m / 2) % m + m) % m);
        CHECK(std::abs(c.at(i) - s * cell) < 1e-12);
    }
    GridFunction other(m, 1, 1.0);
    CHECK_THROWS_AS(convolve(f, other), DomainError);
}

TEST_CASE("spherical zero radii") {
    const int m = 64;
    // Annulus 9.5 <= |k| < 12.5 removed: radii 10, 11, 12.
    const auto ring = from_spectrum(m, [](int a, int b) {
        const double r = std::hypot(a, b);
        return (r >= 9.5 && r < 12.5) ? Complex(0.0) : Complex(1.0);
    });
    const auto s = spherical_zero_radii(ring);
    CHECK(s.radii == std::vector<double>{10.0, 11.0, 12.0});
    CHECK(s.gaps.empty());
    CHECK(s.frequency_spacing == doctest::Approx(1.0 / m));

    const auto full = from_spectrum(m, [](int, int) { return Complex(1.0); });
    CHECK(spherical_zero_radii(full).radii.empty());

    // Cantor-like radius set survives the round trip.
    const std::vector<double> design{3, 5, 9, 11, 21, 23, 27, 29};
    const auto cantor = from_spectrum(m, [&](int a, int b) {
        const double r = std::round(std::hypot(a, b));
        return std::find(design.begin(), design.end(), r) != design.end() ? Complex(0.0) : Complex(1.0);
    });
    CHECK(spherical_zero_radii(cantor).radii == design);

    // Thin shells near the origin contain no lattice point.
    const auto thin = spherical_zero_radii(full, std::nullopt, 0.25);
    CHECK_FALSE(thin.gaps.empty());
    CHECK(thin.radii.empty());
    CHECK_THROWS_AS(spherical_zero_radii(full, std::nullopt, 0.0), DomainError);
    CHECK_THROWS_AS(spherical_zero_radii(basis(8, 0)), DomainError);
}

TEST_CASE("verdict intervals") {
    const auto radial = radial_motion_verdict(DimensionInput::exact(0.5), 2);
    CHECK(radial.conclusive);
    CHECK(radial.interval.lo == doctest::Approx(4.0 / 2.5));
    CHECK(radial.interval.hi == 2.0);
    CHECK(radial.interval.hi_closed);

    const auto mt = radial_motion_verdict(DimensionInput::exact(kBeta), 2);
    CHECK(mt.interval.lo == doctest::Approx(4.0 / (3.0 - kBeta)));

    const auto translation = translation_verdict(DimensionInput::exact(2.0 * kBeta), 2);
    CHECK(translation.conclusive);
    CHECK(translation.interval.lo == doctest::Approx(4.0 / (4.0 - 2.0 * kBeta)));
    CHECK(std::isinf(translation.interval.hi));

    const auto full = translation_verdict(DimensionInput::exact(0.0), 1);
    CHECK(full.interval.lo == doctest::Approx(1.0));

    // beta >= 1 and alpha >= n give nothing.
    CHECK_FALSE(radial_motion_verdict(DimensionInput::exact(1.0), 2).conclusive);
    CHECK_FALSE(translation_verdict(DimensionInput::exact(2.0), 2).conclusive);

    // Lower endpoints grow with the dimension, so intervals shrink.
    double last = 0.0;
    for (double a = 0.0; a < 2.0; a += 0.25) {
        const auto v = translation_verdict(DimensionInput::exact(a), 2);
        CHECK(v.interval.lo > last);
        last = v.interval.lo;
    }
    const auto ci = translation_verdict(DimensionInput{1.0, 0.8, 1.2}, 2);
    CHECK(ci.widest.contains(ci.interval));
    CHECK(ci.interval.contains(ci.guaranteed));
    CHECK(ci.guaranteed.lo == doctest::Approx(4.0 / 2.8));

    const auto pack = packing_verdict(DimensionInput::exact(1.0), 2);
    CHECK(pack.interval.lo == doctest::Approx(translation_verdict(DimensionInput::exact(1.0), 2).interval.lo));
}

TEST_CASE("reference rows and JSON") {
    CHECK(reference_verdicts(1).size() == 3u);
    const auto refs = reference_verdicts(3);
    REQUIRE(refs.size() == 4u);
    for (const auto& r : refs) CHECK(r.reference);

    const auto rows = build_verdicts(2, DimensionInput::exact(kBeta), DimensionInput::exact(1.26));
    const auto json = nlohmann::json::parse(verdicts_to_json(rows));
    REQUIRE(json.is_array());
    CHECK(json.size() == rows.size());
    bool saw_null = false;
    for (const auto& row : json) {
        CHECK(row.contains("theorem"));
        if (row.contains("p_interval") && row["p_interval"]["hi"].is_null()) saw_null = true;
    }
    CHECK(saw_null);
}

TEST_CASE("angular decomposition") {
    const int m = 8, K = 9;
    const auto g = random_grid(m, 2, 7), h = random_grid(m, 2, 8);
    AngularSamples F;
    F.m = m;
    F.cell = 0.5;
    F.angles = K;
    for (int k = 0; k < K; ++k) {
        const double a = 2.0 * M_PI * k / K;
        std::vector<Complex> slice(g.values.size());
        for (std::size_t z = 0; z < slice.size(); ++z)
            slice[z] = g.values[z] * std::polar(1.0, 2.0 * a) + h.values[z] * std::polar(1.0, -3.0 * a);
        F.values.push_back(slice);
    }
    const auto fam = angular_decompose(F, -4, 4);
    for (int order = -4; order <= 4; ++order) {
        const auto& f = fam.at(order);
        for (std::size_t z = 0; z < f.values.size(); ++z) {
            Complex expect = 0.0;
            if (order == 2) expect = 2.0 * M_PI * g.values[z];
            if (order == -3) expect = 2.0 * M_PI * h.values[z];
            CHECK(std::abs(f.values[z] - expect) < 1e-12);
        }
    }

    // Parseval over a complete set of orders.
    double sq = 0.0;
    for (const auto& f : fam.components) sq += std::pow(f.l2_norm(), 2);
    CHECK(sq / (2.0 * M_PI) == doctest::Approx(std::pow(F.l2_norm(), 2)).epsilon(1e-12));

    const auto back = resynthesize(fam, K);
    for (int k = 0; k < K; ++k)
        for (std::size_t z = 0; z < g.values.size(); ++z)
            CHECK(std::abs(back.values[static_cast<std::size_t>(k)][z] - F.values[static_cast<std::size_t>(k)][z]) < 1e-10);

    CHECK_THROWS_AS(angular_decompose(F, -5, 5), DomainError);
}

TEST_CASE("rotated components") {
    const int m = 8, K = 11;
    const auto radial = [](double x, double y) { return Complex(std::exp(-(x * x + y * y))); };
    const auto p0 = rotated_component(radial, 0, m, 0.5, K);
    const auto p1 = rotated_component(radial, 1, m, 0.5, K);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double x = p0.coordinate(i), y = p0.coordinate(j);
            CHECK(std::abs(p0.at(i, j) - 2.0 * M_PI * radial(x, y)) < 1e-12);
            CHECK(std::abs(p1.at(i, j)) < 1e-12);
        }

    // (x + iy) g(r) turns by e^{i alpha}, so only order -1 survives.
    const auto twist = [](double x, double y) { return Complex(x, y) * std::exp(-(x * x + y * y)); };
    const auto t = rotated_component(twist, -1, m, 0.5, K);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            CHECK(std::abs(t.at(i, j) - 2.0 * M_PI * twist(t.coordinate(i), t.coordinate(j))) < 1e-12);
    CHECK(rotated_component(twist, 2, m, 0.5, K).l2_norm() < 1e-12);

    const auto pair = radial_pair_check(p0, t);
    CHECK(pair.residual == doctest::Approx(convolve(p0, t).l2_norm()));
    CHECK(pair.f_norm == doctest::Approx(p0.l2_norm()));
    CHECK_THROWS_AS(rotated_component(radial, 6, m, 0.5, K), DomainError);
}

TEST_CASE("grid files round trip") {
    auto f = random_grid(6, 2, 9);
    f.cell = 0.125;
    std::stringstream header, csv;
    write_grid_header(header, f);
    write_grid_csv(csv, f);
    const auto g = read_grid(header, csv);
    CHECK(g.m == 6);
    CHECK(g.n == 2);
    CHECK(g.cell == 0.125);
    REQUIRE(g.values.size() == f.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) CHECK(g.values[i] == f.values[i]);

    GridFunction bad(4, 1, 1.0);
    bad.values[2] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
