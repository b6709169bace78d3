#include "doctest.h"

#include "fracspec/common/errors.hpp"
#include "fracspec/fourier/annulus.hpp"
#include "fracspec/fourier/bump.hpp"
#include "fracspec/fourier/cantor_fourier.hpp"
#include "fracspec/fourier/mollifier.hpp"
#include "fracspec/fractal/cantor.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

using namespace fracspec;
using namespace fracspec::fourier;
using fractal::CantorParams;

namespace {

const double kTau = 2.0 * M_PI;

template <typename F>
double gk(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-13);
}

// Raw bump exp(-1/(1-t^2)) and its normalization, computed here from scratch.
double raw_bump(double t) { return t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0; }

double bump_mass(int n) {
    switch (n) {
        case 1: return 2.0 * gk(raw_bump, 0.0, 1.0);
        case 2: return kTau * gk([](double r) { return raw_bump(r) * r; }, 0.0, 1.0);
        default: return 2.0 * kTau * gk([](double r) { return raw_bump(r) * r * r; }, 0.0, 1.0);
    }
}

// Atoms of the level-J measure by repeated substitution, in doubles.
std::vector<double> atoms(const CantorParams& p, int J) {
    std::vector<double> starts{0.0};
    double len = 1.0;
    const double eta = p.eta.convert_to<double>();
    for (int m = 1; m <= J; ++m) {
        std::vector<double> next;
        for (double s : starts)
            for (const auto& a : p.points) next.push_back(s + a.convert_to<double>() * len);
        starts = std::move(next);
        len *= eta;
    }
    for (double& s : starts) s += len / 2;
    return starts;
}

std::complex<double> atom_sum(const std::vector<double>& xs, double xi) {
    std::complex<double> s = 0.0;
    for (double x : xs) s += std::polar(1.0, -xi * x);
    return s / static_cast<double>(xs.size());
}

}  // namespace

TEST_CASE("middle-thirds transform") {
    const auto p = CantorParams::middle_thirds();
    const CantorTransform nu(p, 40);
    CHECK(std::abs(nu(0.0).value - 1.0) < 1e-15);

    // nu^(3 xi) = e^{-i xi} cos(xi) nu^(xi), in the left-endpoint form the
    // moduli agree: |nu^(3 xi)| = |cos xi| |nu^(xi)|.
    for (double xi : {0.1, 0.7, 2.3, 11.0}) {
        const double lhs = std::abs(nu(3.0 * xi).value);
        const double rhs = std::abs(std::cos(xi)) * std::abs(nu(xi).value);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }

    // No decay along 3^k pi.
    const double base = std::abs(nu(M_PI).value);
    CHECK(base > 0.4);
    for (int k = 1; k <= 12; ++k)
        CHECK(std::abs(nu(std::pow(3.0, k) * M_PI).value) == doctest::Approx(base).epsilon(1e-6));
}

TEST_CASE("truncation, symmetry and modulus") {
    const auto p = CantorParams::middle_thirds();
    const CantorTransform a(p, 30), b(p, 35);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (int i = 0; i < 200; ++i) {
        const double xi = u(rng);
        const auto va = a(xi), vb = b(xi);
        CHECK(std::abs(va.value - vb.value) <= va.error_bound + vb.error_bound + 1e-13);
        CHECK(std::abs(a(-xi).value - std::conj(va.value)) < 1e-12);
        CHECK(std::abs(va.value) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(CantorTransform(p, 0), DomainError);
}

TEST_CASE("transform agrees with the direct atom sum") {
    CantorParams p;
    p.N = 3;
    p.eta = Rational(1, 5);
    p.points = {Rational(0), Rational(3, 10), Rational(61, 100)};
    const int J = 7;
    const auto xs = atoms(p, J);
    const CantorTransform nu(p, J);
    for (double xi : {0.0, 1.0, -4.5, 37.0, 250.0, 1234.5}) {
        const auto v = nu(xi);
        CHECK(std::abs(v.value - atom_sum(xs, xi)) < 1e-11);
        CHECK(v.error_bound == doctest::Approx(std::abs(xi) * std::pow(0.2, J)));
    }
}

TEST_CASE("product measure transform factorizes") {
    const auto p = CantorParams::middle_thirds();
    const CantorTransform nu(p, 30);
    const std::vector<double> xi{1.5, -7.25, 30.0};
    const auto v = product_measure_fourier(nu, xi);
    const auto expect = nu(xi[0]).value * nu(xi[1]).value * nu(xi[2]).value;
    CHECK(std::abs(v.value - expect) < 1e-13);
}

TEST_CASE("lattice L^q sums factorize for products") {
    const auto p = CantorParams::middle_thirds();
    const CantorTransform nu(p, 30);
    const int half = 20;
    const double h = 0.75;
    const auto one = SpectralGrid::sample(1, h, half, [&](const std::vector<double>& x) {
        const auto v = nu(x[0]);
        return std::make_pair(v.value, v.error_bound);
    });
    const auto two = SpectralGrid::sample(2, h, half, [&](const std::vector<double>& x) {
        const auto v = product_measure_fourier(nu, x);
        return std::make_pair(v.value, v.error_bound);
    }, 2);
    REQUIRE(two.values.size() == one.values.size() * one.values.size());
    const double q = 3.0;
    double s1 = 0.0, s2 = 0.0;
    for (const auto& v : one.values) s1 += std::pow(std::abs(v), q) * h;
    for (const auto& v : two.values) s2 += std::pow(std::abs(v), q) * h * h;
    CHECK(s2 == doctest::Approx(s1 * s1).epsilon(1e-12));

    std::ostringstream csv;
    write_spectral_csv(csv, one);
    CHECK(csv.str().find("error_bound") != std::string::npos);
}

TEST_CASE("annulus trends on power laws") {
    const auto decay = [](double x) { return std::pow(std::abs(x), -0.5); };
    const auto d3 = lq_annulus_diagnostics_1d(decay, 3.0, 2, 10);
    REQUIRE(d3.ratios.size() == 8u);
    for (double r : d3.ratios) CHECK(r == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-9));
    CHECK(d3.verdict == Trend::summable_like);
    // Octave integral 2 * int x^{-3/2} = 4 (2^{-j/2} - 2^{-(j+1)/2}).
    for (const auto& o : d3.octaves)
        CHECK(o.integral == doctest::Approx(4.0 * (std::pow(2.0, -o.octave / 2.0) - std::pow(2.0, -(o.octave + 1) / 2.0)))
                                .epsilon(1e-10));

    const auto d2 = lq_annulus_diagnostics_1d(decay, 2.0, 2, 10);
    CHECK(d2.trend_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d2.verdict == Trend::divergent_like);

    // In the plane |x|^{-1} with q = 3 loses a factor 2 per octave.
    const auto r2 = lq_annulus_diagnostics_radial([](double r) { return 1.0 / r; }, 2, 3.0, 1, 8);
    CHECK(r2.trend_ratio == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(lq_annulus_diagnostics_1d(decay, 3.0, 2, 4), DomainError);
    CHECK_THROWS_AS(lq_annulus_diagnostics_1d(decay, 0.5, 2, 10), DomainError);
}

TEST_CASE("middle-thirds transform is divergent-like in every L^q") {
    const CantorTransform nu(CantorParams::middle_thirds(), 40);
    const auto modulus = [&](double x) { return std::abs(nu(x).value); };
    for (double q : {2.0, 6.0}) {
        const auto d = lq_annulus_diagnostics_1d(modulus, q, 2, 12, OctaveQuadrature{0.25, 1});
        CHECK(d.verdict == Trend::divergent_like);
    }
}

TEST_CASE("bump normalization and transform") {
    for (int n : {1, 2, 3}) {
        const BumpFunction chi(n);
        CHECK(chi.normalization() == doctest::Approx(1.0 / bump_mass(n)).epsilon(1e-11));
        CHECK(chi.fourier_radial(0.0) == doctest::Approx(std::pow(kTau, -n / 2.0)).epsilon(1e-11));
        const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
        CHECK(chi(origin) == doctest::Approx(chi.normalization() * std::exp(-1.0)));
        std::vector<double> edge(static_cast<std::size_t>(n), 0.0);
        edge[0] = 1.0;
        CHECK(chi(edge) == 0.0);
    }

    // n = 1: cosine transform; n = 3: sinc kernel.
    const BumpFunction c1(1), c3(3);
    for (double rho : {0.5, 3.0, 17.0, 60.0}) {
        const double one = 2.0 * c1.normalization() *
                           gk([&](double x) { return raw_bump(x) * std::cos(rho * x); }, 0.0, 1.0) /
                           std::sqrt(kTau);
        CHECK(std::abs(c1.fourier_radial(rho) - one) < 1e-12);
        const double three = 2.0 * kTau * c3.normalization() *
                             gk([&](double r) { return raw_bump(r) * r * std::sin(rho * r) / rho; }, 0.0, 1.0) /
                             std::pow(kTau, 1.5);
        CHECK(std::abs(c3.fourier_radial(rho) - three) < 1e-12);
    }
    CHECK_THROWS_AS(BumpFunction(0), DomainError);
}

TEST_CASE("dyadic bump profile") {
    const BumpFunction chi(2);
    const auto prof = bump_profile(chi, 1.0, -12, 6);
    REQUIRE(prof.a.size() == 19u);
    for (double a : prof.a) CHECK(a >= 0.0);
    // Far below the unit frequency chi^ is flat, so a_j halves per octave down.
    for (int j = -12; j < -6; ++j) CHECK(prof.at(j) / prof.at(j + 1) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(prof.at(-12) == doctest::Approx(std::pow(2.0, -12) / (kTau * kTau)).epsilon(1e-3));
    CHECK(prof.partial_sums.back() == doctest::Approx(prof.limit_estimate));
    CHECK(prof.cauchy_index <= 6);
    for (int j = prof.cauchy_index; j <= 6; ++j) CHECK(prof.at(j) < prof.cauchy_tol);
    CHECK_THROWS_AS(bump_profile(chi, 2.0, 0, 3), DomainError);
}

TEST_CASE("mollifier sums") {
    const BumpFunction chi(2);
    const auto prof = bump_profile(chi, 1.0, -16, 6);
    const auto f = RadialFunction::bessel_surrogate(1.0, 16.0, 4.0);
    std::vector<double> eps;
    for (int k = 0; k < 7; ++k) eps.push_back(0.25 * std::pow(0.5, k));
    const auto sweep = mollifier_sum(f, prof, eps);

    // b oracle: weight times 2 pi int |f|^2 r dr over the clipped shell.
    for (std::size_t e = 0; e < eps.size(); e += 3) {
        for (int j = -16; j <= 6; j += 5) {
            const double lo = std::max(1.0, std::ldexp(1.0, j) / eps[e]);
            const double hi = std::min(16.0, std::ldexp(2.0, j) / eps[e]);
            double expect = 0.0;
            if (hi > lo) {
                expect = std::ldexp(1.0, -j) * eps[e] * kTau *
                         gk([&](double r) { return std::pow(f.profile(r), 2) * r; }, lo, hi);
            }
            CHECK(sweep.b[e][static_cast<std::size_t>(j + 16)] == doctest::Approx(expect).epsilon(1e-9).scale(1e-14));
        }
    }
    CHECK(sweep.uniform_bound_holds);
    CHECK(sweep.worst_bound_ratio <= 1.0);
    for (std::size_t k = 0; k < sweep.fixed_j_tail_monotone.size(); ++k) CHECK(sweep.fixed_j_tail_monotone[k]);
    CHECK(sweep.sums_decreasing_after_transient);
    CHECK(sweep.final_over_initial < 1.0);

    const auto zero = mollifier_sum(RadialFunction::zero(16.0, 4.0), prof, eps);
    for (double s : zero.sums) CHECK(s == 0.0);

    const std::vector<double> increasing{0.1, 0.2};
    CHECK_THROWS_AS(mollifier_sum(f, prof, increasing), DomainError);
    auto low_p = f;
    low_p.p = 1.5;
    CHECK_THROWS_AS(mollifier_sum(low_p, prof, eps), DomainError);

    std::ostringstream csv;
    write_mollifier_csv(csv, sweep);
    CHECK(csv.str().rfind("eps,j,b,a,product", 0) == 0);
}

TEST_CASE("fixed j vanishes once the shell leaves the support") {
    const BumpFunction chi(2);
    const auto prof = bump_profile(chi, 1.0, -4, 2);
    const auto f = RadialFunction::bessel_surrogate(1.0, 8.0, 4.0);
    const std::vector<double> eps{1.0, 1e-2, 1e-4};
    const auto sweep = mollifier_sum(f, prof, eps);
    // At eps = 1e-4 every shell starts beyond 2^-4 / 1e-4 = 625 > 8.
    for (std::size_t k = 0; k < sweep.fixed_j_vanishing.size(); ++k) {
        CHECK(sweep.fixed_j_vanishing[k]);
        CHECK(sweep.b.back()[k] == 0.0);
    }
}

TEST_CASE("mollified pairing") {
    const BumpFunction chi(1);
    const auto nu = fractal::natural_measure(CantorParams::middle_thirds(), 8);
    const TestFunction psi{{0.5}, 0.6};

    double limit = 0.0;
    for (std::size_t i = 0; i < nu.measure.size(); ++i) limit += nu.measure.weight(i) * psi(nu.measure.atom(i));

    for (double eps : {1.0 / 8, 1.0 / 32}) {
        const auto r = mollified_pairing(nu.measure, psi, chi, eps);
        CHECK(std::abs(r.pairing) <= r.bound * (1.0 + 1e-12));
        CHECK(r.limit_value == doctest::Approx(limit).epsilon(1e-14));
    }
    const auto fine = mollified_pairing(nu.measure, psi, chi, 1e-3);
    CHECK(std::abs(fine.pairing - limit) < 1e-4);

    // Support of psi away from the measure.
    const TestFunction far{{5.0}, 0.5};
    const auto sep = mollified_pairing(nu.measure, far, chi, 1.0 / 16);
    CHECK(std::abs(sep.pairing) < 1e-15);
    CHECK(sep.limit_value == 0.0);

    CHECK_THROWS_AS(mollified_pairing(nu.measure, psi, chi, 0.1, 1e-6), SizeError);
    CHECK_THROWS_AS(mollified_pairing(nu.measure, psi, BumpFunction(2), 0.1), DomainError);
}
