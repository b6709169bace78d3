#include "doctest.h"
#include "oracles.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/fractal/cantor.hpp"
#include "fracspec/fractal/params_io.hpp"
#include "fracspec/fractal/product.hpp"
#include "fracspec/geometry/dimension.hpp"
#include "fracspec/geometry/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

using namespace fracspec;
using namespace fracspec::fractal;

namespace {

const double kBeta = std::log(2.0) / std::log(3.0);

CantorParams three_point() {
    CantorParams p;
    p.N = 3;
    p.eta = Rational(1, 5);
    p.points = {Rational(0), Rational(3, 10), Rational(61, 100)};
    return p;
}

// Level built by repeated substitution [s, s+L] -> [s + a L, s + a L + eta L],
// written independently of the library's digit expansion.
std::vector<std::pair<Rational, Rational>> substitute(const CantorParams& p, int j) {
    std::vector<std::pair<Rational, Rational>> cur{{Rational(0), Rational(1)}};
    for (int m = 1; m <= j; ++m) {
        const Rational eta = p.eta_at(m);
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [s, len] : cur)
            for (const auto& a : p.points) next.emplace_back(s + a * len, Rational(eta * len));
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

}  // namespace

TEST_CASE("parameter validation") {
    const auto mt = validate_params(CantorParams::middle_thirds());
    CHECK(mt.valid);
    CHECK(mt.beta_computed == doctest::Approx(kBeta).epsilon(1e-14));

    const auto three = validate_params(three_point());
    CHECK(three.valid);
    CHECK(three.beta_computed == doctest::Approx(std::log(3.0) / std::log(5.0)).epsilon(1e-14));

    CantorParams half;
    half.eta = Rational(1, 2);
    half.points = {Rational(0), Rational(1, 2)};
    const auto bad = validate_params(half);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violates("N*eta<1"));
    CHECK_THROWS_AS(require_valid(half), DomainError);

    auto close = three_point();
    close.points[1] = Rational(1, 5);
    CHECK(validate_params(close).violates("spacing>eta"));

    auto outside = three_point();
    outside.points[2] = Rational(81, 100);
    CHECK(validate_params(outside).violates("a_N<=1-eta"));

    auto declared = CantorParams::middle_thirds();
    declared.beta = 0.5;
    CHECK(validate_params(declared).violates("N*eta^beta=1"));
    declared.beta = kBeta;
    CHECK(validate_params(declared).valid);

    auto custom = CantorParams::middle_thirds();
    custom.rule = EtaRule::custom;
    custom.custom_etas = {Rational(1, 4), Rational(8, 27)};
    CHECK(validate_params(custom).valid);
    custom.custom_etas = {Rational(1, 5)};
    CHECK(validate_params(custom).violates("eta_j-bounds"));
}

TEST_CASE("exact levels of the middle-thirds set") {
    const auto p = CantorParams::middle_thirds();
    const auto k1 = build_level(p, 1);
    REQUIRE(k1.intervals.size() == 2);
    CHECK(k1.intervals.intervals()[0].start == 0);
    CHECK(k1.intervals.intervals()[0].end() == Rational(1, 3));
    CHECK(k1.intervals.intervals()[1].start == Rational(2, 3));
    CHECK(k1.intervals.intervals()[1].end() == 1);

    const auto k2 = build_level(p, 2);
    const std::vector<Rational> starts{0, Rational(2, 9), Rational(2, 3), Rational(8, 9)};
    REQUIRE(k2.intervals.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(k2.intervals.intervals()[i].start == starts[i]);
        CHECK(k2.intervals.intervals()[i].length == Rational(1, 9));
    }
    CHECK(build_level(p, 0).intervals.measure() == 1);
}

TEST_CASE("converging rule") {
    auto p = CantorParams::middle_thirds();
    p.rule = EtaRule::converging;
    CHECK(p.eta_at(1) == Rational(1, 4));
    CHECK(p.eta_at(2) == Rational(8, 27));
    const auto k1 = build_level(p, 1);
    REQUIRE(k1.intervals.size() == 2);
    CHECK(k1.intervals.intervals()[0].end() == Rational(1, 4));
    CHECK(k1.intervals.intervals()[1].start == Rational(2, 3));
    CHECK(k1.intervals.intervals()[1].end() == Rational(11, 12));
    for (int j = 1; j < 8; ++j) CHECK(p.eta_at(j) < p.eta_at(j + 1));
}

TEST_CASE("levels match repeated substitution, nest, and obey the length and gap laws") {
    for (const auto& p : {CantorParams::middle_thirds(), three_point()}) {
        for (int j = 0; j <= 5; ++j) {
            const auto level = build_level(p, j);
            const auto expect = substitute(p, j);
            REQUIRE(level.intervals.size() == expect.size());
            for (std::size_t i = 0; i < expect.size(); ++i) {
                CHECK(level.intervals.intervals()[i].start == expect[i].first);
                CHECK(level.intervals.intervals()[i].length == expect[i].second);
            }
            CHECK(level.length == pow(p.eta, static_cast<unsigned>(j)));
            CHECK(level.intervals.measure() == pow(Rational(p.N) * p.eta, static_cast<unsigned>(j)));
            if (j > 0) CHECK(build_level(p, j - 1).intervals.contains(level.intervals));

            // Gaps between neighbours are at least (min spacing - eta) times the parent length.
            Rational min_spacing = 1;
            for (std::size_t k = 0; k + 1 < p.points.size(); ++k)
                min_spacing = std::min(min_spacing, Rational(p.points[k + 1] - p.points[k]));
            const Rational parent = j > 0 ? pow(p.eta, static_cast<unsigned>(j - 1)) : Rational(1);
            const auto& iv = level.intervals.intervals();
            for (std::size_t i = 0; i + 1 < iv.size(); ++i)
                CHECK(iv[i + 1].start - iv[i].end() >= (min_spacing - p.eta) * parent);
        }
    }
}

TEST_CASE("natural measure") {
    const auto p = CantorParams::middle_thirds();
    const auto nu = natural_measure(p, 8);
    CHECK(nu.measure.size() == 256u);
    CHECK(nu.measure.total() == doctest::Approx(1.0).epsilon(1e-14));

    const auto k5 = build_level(p, 5);
    const auto masses = interval_masses(nu, k5);
    REQUIRE(masses.size() == 32u);
    for (double m : masses) CHECK(m == doctest::Approx(std::pow(2.0, -5)).epsilon(1e-12));

    // The leftmost level-5 interval [0, 3^-5] carries 2^-5.
    double left = 0.0;
    const double edge = std::pow(3.0, -5);
    for (std::size_t i = 0; i < nu.measure.size(); ++i)
        if (nu.measure.atom(i)[0] <= edge) left += nu.measure.weight(i);
    CHECK(left == doctest::Approx(std::pow(2.0, -5)).epsilon(1e-12));

    // Coarser discretizations agree on every level they resolve.
    const auto coarse = natural_measure(p, 5);
    const auto coarse_masses = interval_masses(coarse, k5);
    for (std::size_t i = 0; i < masses.size(); ++i) CHECK(coarse_masses[i] == doctest::Approx(masses[i]));
}

TEST_CASE("random translates") {
    const auto a = sample_salem_points(4, Rational(1, 16), 42);
    const auto b = sample_salem_points(4, Rational(1, 16), 42);
    const auto c = sample_salem_points(4, Rational(1, 16), 43);
    CHECK(a == b);
    CHECK(a != c);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CantorParams p;
        p.N = 4;
        p.eta = Rational(1, 16);
        p.points = sample_salem_points(4, p.eta, seed);
        CHECK(validate_params(p).valid);
        CHECK(p.dimension() == doctest::Approx(0.5).epsilon(1e-14));
    }
    CHECK_THROWS_AS(sample_salem_points(3, Rational(2, 5), 1), DomainError);
}

TEST_CASE("product set") {
    const auto p = CantorParams::middle_thirds();
    const ProductSet k2(build_level(p, 3), 2);
    CHECK(k2.cube_count() == 64u);
    CHECK(k2.side() == Rational(1, 27));

    std::set<std::pair<double, double>> corners;
    for (std::uint64_t i = 0; i < k2.cube_count(); ++i) {
        const auto cube = k2.cube(i);
        REQUIRE(cube.corner.size() == 2u);
        corners.emplace(cube.corner[0], cube.corner[1]);
    }
    CHECK(corners.size() == 64u);
    CHECK_THROWS(ProductSet(build_level(p, 3), 0));

    const auto nu = natural_measure(p, 4);
    const auto nu2 = product_measure(nu.measure, 2);
    CHECK(nu2.size() == 256u);
    CHECK(nu2.total() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(product_measure(nu.measure, 3, 1000), SizeError);
}

TEST_CASE("product box dimension is n beta") {
    const ProductSet k2(build_level(CantorParams::middle_thirds(), 7), 2);
    const auto cloud = k2.sample();
    const auto fit = geometry::box_dimension_estimate(cloud, geometry::ScaleSweep{1.0 / 9, 1.0 / 3, 4});
    CHECK(fit.slope == doctest::Approx(2 * kBeta).epsilon(0.05 / (2 * kBeta)));
}

TEST_CASE("neighbourhood volume of a product cloud matches a grid oracle") {
    const ProductSet k2(build_level(CantorParams::middle_thirds(), 2), 2);
    const auto cloud = k2.sample(0.0);
    std::vector<oracle::Point> pts;
    for (std::size_t i = 0; i < cloud.size(); ++i) pts.emplace_back(cloud.point(i).begin(), cloud.point(i).end());
    for (double eps : {0.05, 0.12, 0.3}) {
        const double exact = geometry::disk_union_area(cloud, eps);
        const double grid = oracle::disk_union_area_grid(pts, eps, 2000);
        CHECK(exact == doctest::Approx(grid).epsilon(2e-3));
    }
}

TEST_CASE("parameter text round trip and level CSV") {
    auto p = three_point();
    p.rule = EtaRule::converging;
    p.seed = 9;
    std::stringstream text;
    write_params(text, p);
    const auto q = read_params(text);
    CHECK(q.N == p.N);
    CHECK(q.eta == p.eta);
    CHECK(q.points == p.points);
    CHECK(q.rule == p.rule);
    CHECK(q.seed == p.seed);

    std::istringstream decimal("N = 3\neta = 0.2   # decimal\npoints = 0, 0.3, 0.61\n");
    const auto d = read_params(decimal);
    CHECK(d.eta == Rational(1, 5));
    CHECK(d.points == three_point().points);

    std::ostringstream csv;
    write_level_csv(csv, build_level(CantorParams::middle_thirds(), 2));
    std::istringstream rows(csv.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(rows, line))
        if (!line.empty()) lines.push_back(line);
    REQUIRE(lines.size() >= 4u);
    CHECK(lines.back().find("8,9,1,9") != std::string::npos);
}

TEST_CASE("construction budget") {
    const auto p = CantorParams::middle_thirds();
    CHECK_THROWS_AS(build_level(p, 21), SizeError);
    CHECK_THROWS_AS(build_level(p, 10, LevelBudget{20, 100}), SizeError);
    CHECK_THROWS_AS(build_level(p, -1), DomainError);
}
