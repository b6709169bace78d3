#include "fracspec/experiments/acceptance.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"
#include "fracspec/fourier/bump.hpp"
#include "fracspec/fourier/cantor_fourier.hpp"
#include "fracspec/fourier/mollifier.hpp"
#include "fracspec/fractal/cantor.hpp"
#include "fracspec/geometry/covering.hpp"
#include "fracspec/geometry/density.hpp"
#include "fracspec/geometry/dimension.hpp"
#include "fracspec/geometry/neighborhood.hpp"
#include "fracspec/tauberian/span.hpp"
#include "fracspec/tauberian/verdict.hpp"
#include "shared.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace fracspec::experiments {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        failures += (pass ? "" : "; ") + what;
        pass = false;
    }
    std::string text() const { return pass ? detail.str() : detail.str() + " | failed: " + failures; }
};

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

const double kBeta = std::log(2.0) / std::log(3.0);

Outcome covering_packing_chain(const VerifyOptions& opt) {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checks = 0, failures = 0;
    for (int set = 0; set < 100; ++set) {
        std::mt19937_64 rng(detail::task_seed(1, static_cast<std::uint64_t>(set)));
        const int n = 1 + set % 2;
        const int count = 2 + static_cast<int>(rng() % 14);
        std::vector<double> flat;
        for (int k = 0; k < count * n; ++k) flat.push_back(detail::unit_double(rng));
        const geometry::PointCloud cloud(n, std::move(flat));
        const double ball = unit_ball_volume(n);
        for (int s = 0; s < 5; ++s) {
            const double eps = 0.01 * std::pow(50.0, detail::unit_double(rng));
            using geometry::CountMode;
            const auto cover2 = geometry::covering_number(cloud, 2 * eps, CountMode::exact);
            const auto cover = geometry::covering_number(cloud, eps, CountMode::exact);
            const auto cover_half = geometry::covering_number(cloud, eps / 2, CountMode::exact);
            const auto pack = geometry::packing_number(cloud, eps, CountMode::exact);
            const auto vol = geometry::eps_neighborhood_volume(cloud, eps);
            const double lower = ball * static_cast<double>(pack) * std::pow(eps, n);
            const double upper = ball * static_cast<double>(cover) * std::pow(2 * eps, n);
            const bool ok = cover2 <= pack && pack <= cover_half && lower <= vol.value * (1 + 1e-12) &&
                            vol.value <= upper * (1 + 1e-12);
            ++checks;
            if (!ok) ++failures;
        }
    }
    const double t = elapsed(start);
    o.detail << checks - failures << "/" << checks << " chains hold, " << t << " s";
    o.require(failures == 0, "chain violated");
    o.require(t < 60.0, "runtime over 60 s");
    (void)opt;
    return o;
}

Outcome box_dimension(const VerifyOptions& opt) {
    Outcome o;
    const auto start = Clock::now();
    const auto level = fractal::build_level(fractal::CantorParams::middle_thirds(), 11);
    std::vector<double> mids;
    for (const auto& iv : level.intervals.intervals()) mids.push_back(to_double(iv.start + iv.length / 2));
    const auto cloud = geometry::PointCloud::from_1d(mids);
    const geometry::ScaleSweep sweep{1.0 / 27.0, 1.0 / 3.0, 8};
    const auto fit = geometry::box_dimension_estimate(cloud, sweep, geometry::CountMode::greedy, opt.jobs);
    const double t = elapsed(start);
    o.detail << "slope " << fit.slope << " vs " << kBeta << ", " << t << " s";
    o.require(std::abs(fit.slope - kBeta) <= 0.02, "slope off by more than 0.02");
    o.require(t < 5.0, "runtime over 5 s");
    return o;
}

Outcome minkowski_ratio(const VerifyOptions& opt) {
    Outcome o;
    double lo = 1e300, hi = 0.0, at_two = 0.0;
    bool exact_two = false;
    for (int m = 2; m <= 12; ++m) {
        const auto level = fractal::build_level(fractal::CantorParams::middle_thirds(), m);
        const Rational eps = pow(Rational(1, 3), static_cast<unsigned>(m));
        double ratio;
        if (opt.inject_beta) {
            const double e = to_double(eps);
            ratio = std::pow(e, *opt.inject_beta - 1.0) * to_double(geometry::eps_neighborhood_volume(level.intervals, eps));
        } else {
            const Rational r = geometry::minkowski_ratio_exact(level.intervals, eps, pow(Rational(1, 2), static_cast<unsigned>(m)));
            if (m == 2) exact_two = r == Rational(5, 2);
            ratio = to_double(r);
        }
        if (m == 2) at_two = ratio;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    o.detail << "ratios in [" << lo << ", " << hi << "], m=2 ratio " << at_two;
    if (opt.inject_beta) o.detail << " (beta injected as " << *opt.inject_beta << ")";
    o.require(lo >= 1.0 && hi <= 3.0, "ratio outside [1, 3]");
    if (!opt.inject_beta) o.require(exact_two, "m=2 ratio is not exactly 5/2");
    return o;
}

Outcome product_sandwich(const VerifyOptions&) {
    Outcome o;
    double lo = 1e300, hi = 0.0;
    for (int m = 2; m <= 8; ++m) {
        const double eps = std::pow(3.0, -m);
        const auto level = fractal::build_level(fractal::CantorParams::middle_thirds(), m + 2);
        const double inner = geometry::eps_neighborhood_volume(level.intervals, eps / std::sqrt(2.0)).value;
        const double outer = geometry::eps_neighborhood_volume(level.intervals, eps).value;
        const double scale = std::pow(eps, 2 * kBeta - 2);
        const double lower = scale * inner * inner, upper = scale * outer * outer;
        o.require(lower <= upper, "sandwich inverted at m=" + std::to_string(m));
        lo = std::min(lo, lower);
        hi = std::max(hi, upper);
    }
    o.detail << "sandwich ratios in [" << lo << ", " << hi << "]";
    o.require(lo >= 1.0 && hi <= 9.0, "ratio outside [1, 9]");
    return o;
}

Outcome cantor_nondecay(const VerifyOptions&) {
    Outcome o;
    const fourier::CantorTransform nu(fractal::CantorParams::middle_thirds(), 40);
    const double base = std::abs(nu(kPi).value);
    double dev = 0.0;
    for (int k = 0; k <= 8; ++k) dev = std::max(dev, std::abs(std::abs(nu(std::pow(3.0, k) * kPi).value) - base));
    double scale_dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = 0.01 + 0.5 * i;
        const double lhs = std::abs(nu(3 * xi).value);
        const double rhs = std::abs(std::cos(xi)) * std::abs(nu(xi).value);
        scale_dev = std::max(scale_dev, std::abs(lhs - rhs));
    }
    o.detail << "|nu^(pi)| = " << base << ", max dev over 3^k pi " << dev << ", scale identity dev " << scale_dev;
    o.require(base > 0.1, "|nu^(pi)| unexpectedly small");
    o.require(dev <= 1e-6, "3^k pi values differ");
    o.require(scale_dev <= 1e-10, "scale identity fails");
    return o;
}

Outcome salem_decay(const VerifyOptions& opt) {
    Outcome o;
    int both = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto six = detail::salem_diagnostics(seed, 6.0, 12, 2, 14, 0.5, opt.jobs);
        const auto three = detail::salem_diagnostics(seed, 3.0, 12, 2, 14, 0.5, opt.jobs);
        const bool ok = six.diagnostics.verdict == fourier::Trend::summable_like &&
                        three.diagnostics.verdict == fourier::Trend::divergent_like;
        if (ok) ++both;
        o.detail << (seed > 1 ? "; " : "") << "seed " << seed << ": q6 " << six.diagnostics.trend_ratio << " q3 "
                 << three.diagnostics.trend_ratio;
    }
    o.detail << "; " << both << "/5 seeds as expected";
    o.require(both >= 3, "fewer than 3 seeds show the expected trends");
    return o;
}

Outcome mollifier(const VerifyOptions& opt) {
    Outcome o;
    const fourier::BumpFunction chi(2);
    const auto profile = fourier::bump_profile(chi, 1.0, -16, 6, 64, opt.jobs);
    const auto f = fourier::RadialFunction::bessel_surrogate(1.0, 16.0, 4.0);
    const auto eps = geometry::ScaleSweep{0.25, 0.5, 7}.scales();
    const auto sweep = fourier::mollifier_sum(f, profile, eps, 0.25, opt.jobs);
    bool decreasing = true;
    for (std::size_t e = 0; e + 1 < sweep.sums.size(); ++e) decreasing = decreasing && sweep.sums[e + 1] < sweep.sums[e];
    const bool tails = std::all_of(sweep.fixed_j_tail_monotone.begin(), sweep.fixed_j_tail_monotone.end(), [](bool b) { return b; });
    o.detail << "final/initial " << sweep.final_over_initial << ", worst b/(C||f||^2) " << sweep.worst_bound_ratio;
    o.require(decreasing, "sums not decreasing");
    o.require(sweep.final_over_initial <= 0.1, "final/initial above 0.1");
    o.require(tails, "fixed-j tail not monotone");
    o.require(sweep.uniform_bound_holds, "Hoelder bound violated");
    return o;
}

Outcome lp_tail(const VerifyOptions& opt) {
    Outcome o;
    const auto f = fourier::RadialFunction::bessel_surrogate(1.0, 1e9, 4.0);
    auto modulus = [&](double r) { return std::abs(f.profile(r)); };
    fourier::OctaveQuadrature quad;
    quad.jobs = opt.jobs;
    const auto five = fourier::lq_annulus_diagnostics_radial(modulus, 2, 5.0, 4, 10, quad);
    const auto four = fourier::lq_annulus_diagnostics_radial(modulus, 2, 4.0, 4, 10, quad);
    const double max5 = *std::max_element(five.ratios.begin(), five.ratios.end());
    const auto [min4, max4] = std::minmax_element(four.ratios.begin(), four.ratios.end());
    o.detail << "p=5 max ratio " << max5 << ", p=4 ratios in [" << *min4 << ", " << *max4 << "]";
    o.require(max5 < 0.85, "p=5 tail not convergent");
    o.require(*min4 >= 0.9 && *max4 <= 1.1, "p=4 ratios outside [0.9, 1.1]");
    return o;
}

Outcome span_oracle(const VerifyOptions&) {
    Outcome o;
    const auto start = Clock::now();
    int total = 0, matches = 0;
    for (int m : {8, 16, 32}) {
        for (int t = 0; t < 100; ++t) {
            std::mt19937_64 rng(detail::task_seed(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(t)));
            const auto trial = detail::random_span_trial(m, rng);
            const auto zeros = tauberian::dft_zero_set(trial.f);
            int above = 0;
            for (double v : zeros.moduli)
                if (v > zeros.tol) ++above;
            const int oracle = tauberian::span_dimension_oracle(trial.f);
            const int rank = tauberian::circulant_rank(trial.f);
            ++total;
            if (oracle == above && oracle == rank && oracle == m - trial.designed_zeros) ++matches;
        }
    }
    const double t = elapsed(start);
    o.detail << matches << "/" << total << " exact matches, " << t << " s";
    o.require(matches == total, "oracle mismatch");
    o.require(t < 30.0, "runtime over 30 s");
    return o;
}

Outcome verdict_formulas(const VerifyOptions&) {
    Outcome o;
    using tauberian::DimensionInput;
    const auto radial = tauberian::radial_motion_verdict(DimensionInput::exact(0.0), 2);
    o.require(radial.conclusive && radial.interval.lo == 4.0 / 3.0 && radial.interval.hi == 2.0 &&
                  radial.interval.lo_closed && radial.interval.hi_closed,
              "beta=0 interval is not [4/3, 2]");
    const auto full = tauberian::translation_verdict(DimensionInput::exact(1.2619), 2);
    o.require(full.conclusive && std::abs(full.interval.lo - 4.0 / 2.7381) <= 1e-3 && std::isinf(full.interval.hi),
              "alpha=1.2619 endpoint is not 4/2.7381");
    const auto empty = tauberian::translation_verdict(DimensionInput::exact(0.0), 2);
    o.require(empty.conclusive && empty.interval.lo == 1.0 && std::isinf(empty.interval.hi), "alpha=0 interval is not [1, inf)");
    o.detail << radial.interval.to_string() << ", " << full.interval.to_string() << ", " << empty.interval.to_string();
    return o;
}

Outcome upper_density(const VerifyOptions&) {
    Outcome o;
    const int J = 14;
    const auto measure = fractal::natural_measure(fractal::CantorParams::middle_thirds(), J);
    const geometry::ScaleSweep radii{1.0 / 3.0, 1.0 / 3.0, J - 2};
    std::mt19937_64 rng(detail::task_seed(11, 0));
    double lo = 1e300, hi = 0.0;
    for (int s = 0; s < 200; ++s) {
        const auto atom = measure.measure.atom(static_cast<std::size_t>(rng() % measure.measure.size()));
        const auto est = geometry::upper_density_estimate(measure.measure, atom, kBeta, radii);
        lo = std::min(lo, est.sup_ratio);
        hi = std::max(hi, est.sup_ratio);
    }
    const double floor = std::pow(2.0, -kBeta) - 0.05;
    o.detail << "upper density estimates in [" << lo << ", " << hi << "], band [" << floor << ", 1.05]";
    o.require(lo >= floor && hi <= 1.05, "estimate outside the band");
    return o;
}

using Suite = std::function<Outcome(const VerifyOptions&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> table{
        {"covering-packing-chain", covering_packing_chain},
        {"box-dimension", box_dimension},
        {"minkowski-ratio", minkowski_ratio},
        {"product-sandwich", product_sandwich},
        {"cantor-nondecay", cantor_nondecay},
        {"salem-decay", salem_decay},
        {"mollifier", mollifier},
        {"lp-tail", lp_tail},
        {"span-oracle", span_oracle},
        {"verdict-formulas", verdict_formulas},
        {"upper-density", upper_density},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
    const bool all = !options.suite || *options.suite == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), *options.suite) == suite_names().end())
        throw ConfigError("unknown suite '" + *options.suite + "'");
    std::vector<CriterionResult> results;
    int id = 0;
    for (const auto& [name, fn] : suites()) {
        ++id;
        if (!all && name != *options.suite) continue;
        CriterionResult r;
        r.id = id;
        r.suite = name;
        const auto start = Clock::now();
        try {
            auto outcome = fn(options);
            r.pass = outcome.pass;
            r.detail = outcome.text();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = elapsed(start);
        results.push_back(std::move(r));
    }
    return results;
}

std::string acceptance_to_json(const std::vector<CriterionResult>& results) {
    nlohmann::ordered_json j;
    int passed = 0;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        if (r.pass) ++passed;
        rows.push_back({{"criterion", r.id}, {"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}});
    }
    j["passed"] = passed;
    j["failed"] = static_cast<int>(results.size()) - passed;
    j["results"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace fracspec::experiments
