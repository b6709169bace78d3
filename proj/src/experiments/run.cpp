#include "fracspec/experiments/run.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/fourier/bump.hpp"
#include "fracspec/fourier/cantor_fourier.hpp"
#include "fracspec/fourier/mollifier.hpp"
#include "fracspec/fractal/params_io.hpp"
#include "fracspec/fractal/product.hpp"
#include "fracspec/geometry/dimension.hpp"
#include "fracspec/geometry/neighborhood.hpp"
#include "fracspec/tauberian/span.hpp"
#include "fracspec/tauberian/spherical.hpp"
#include "fracspec/tauberian/verdict.hpp"
#include "shared.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace fracspec::experiments {

namespace {

namespace fs = std::filesystem;

struct Context {
    const ExperimentConfig& config;
    fs::path dir;
    ReportRecord& record;

    std::ofstream open(const std::string& name) {
        std::ofstream out(dir / name);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        out << std::setprecision(17);
        record.artifacts.push_back(name);
        return out;
    }
};

geometry::CountMode parse_mode(const std::string& text) {
    if (text == "greedy") return geometry::CountMode::greedy;
    if (text == "exact") return geometry::CountMode::exact;
    throw ConfigError("unknown count mode '" + text + "'");
}

void run_construct(Context& ctx) {
    const auto params = ctx.config.cantor();
    const int j = ctx.config.integer("construct.level", 6);
    const int n = ctx.config.integer("construct.n", 1);
    const auto level = fractal::build_level(params, j);
    {
        auto out = ctx.open("params.txt");
        fractal::write_params(out, params);
    }
    {
        auto out = ctx.open("level.csv");
        fractal::write_level_csv(out, level);
    }
    ctx.record.metric("level", j, "1");
    ctx.record.metric("interval_count", static_cast<double>(level.intervals.size()), "count");
    ctx.record.metric("interval_length", to_double(level.length), "length");
    ctx.record.metric("level_measure", to_double(level.intervals.measure()), "length", "Lebesgue measure of the level union");
    ctx.record.metric("beta", params.dimension(), "1", "log N / log(1/eta)");
    if (n > 1) {
        const fractal::ProductSet product(level, n);
        ctx.record.metric("product_cube_count", static_cast<double>(product.cube_count()), "count");
    }
    ctx.record.flag("intervals_disjoint", level.intervals.size() == level.starts.size());
}

void run_dim(Context& ctx) {
    const auto params = ctx.config.cantor();
    const int j = ctx.config.integer("dim.level", 11);
    const int n = ctx.config.integer("dim.n", 1);
    const auto mode = parse_mode(ctx.config.text("dim.mode", "greedy"));
    const auto sweep = ctx.config.sweep({1.0 / 27.0, 1.0 / 3.0, 8});
    const fractal::ProductSet product(fractal::build_level(params, j), n);
    const auto cloud = product.sample(0.5);
    const auto fit = geometry::box_dimension_estimate(cloud, sweep, mode, ctx.config.jobs);
    {
        auto out = ctx.open("counts.csv");
        out << "eps,value,bound_low,bound_high\n";
        for (const auto& p : fit.per_scale) out << p.eps << ',' << p.value << ',' << p.bound_low << ',' << p.bound_high << '\n';
    }
    ctx.record.note("mode", geometry::to_string(mode));
    ctx.record.note("brute_force_cap", std::to_string(geometry::kDefaultBruteForceCap));
    const double expected = n * params.dimension();
    const double tol = ctx.config.number("dim.tolerance", 0.02 * n);
    ctx.record.metric("points", static_cast<double>(cloud.size()), "count");
    ctx.record.metric("slope", fit.slope, "1", "log-log slope clamped to [0, n]");
    ctx.record.metric("raw_slope", fit.raw_slope, "1");
    ctx.record.metric("slope_stderr", fit.slope_stderr, "1");
    ctx.record.metric("residual", fit.residual, "1", "RMS of the log-log fit");
    ctx.record.metric("expected", expected, "1", "n log N / log(1/eta)");
    ctx.record.flag("not_degenerate", !fit.degenerate);
    ctx.record.flag("slope_within_tolerance", std::abs(fit.slope - expected) <= tol);
}

void run_minkowski(Context& ctx) {
    const auto params = ctx.config.cantor();
    const int j = ctx.config.integer("minkowski.level", 12);
    const double alpha = ctx.config.number("minkowski.alpha", params.dimension());
    const auto sweep = ctx.config.sweep({1.0 / 9.0, 1.0 / 3.0, 9});
    const auto level = fractal::build_level(params, j);
    const auto result = geometry::minkowski_ratio_sweep(level.intervals, alpha, sweep);
    {
        auto out = ctx.open("minkowski.csv");
        out << "eps,value,bound_low,bound_high,running_max\n";
        for (std::size_t i = 0; i < result.series.size(); ++i) {
            const auto& p = result.series[i];
            out << p.eps << ',' << p.value << ',' << p.bound_low << ',' << p.bound_high << ',' << result.running_max[i] << '\n';
        }
    }
    ctx.record.metric("alpha", alpha, "1");
    ctx.record.metric("max_ratio", result.max_ratio, "ratio", "eps^(alpha-1) |K(eps)|");
    ctx.record.metric("min_ratio", result.min_ratio, "ratio", "eps^(alpha-1) |K(eps)|");
    ctx.record.metric("tail_max", result.tail_max, "ratio", "max over the finer half of the sweep");
    ctx.record.flag("nonempty", !result.empty_set);
    ctx.record.flag("tail_bounded", result.tail_max <= result.max_ratio);
}

void run_fourier(Context& ctx) {
    const auto params = ctx.config.cantor();
    const int J = ctx.config.integer("fourier.J", 40);
    const double spacing = ctx.config.number("fourier.spacing", 0.5);
    const int half = ctx.config.integer("fourier.half_count", 200);
    const int j0 = ctx.config.integer("fourier.j0", 2);
    const int j1 = ctx.config.integer("fourier.j1", 14);
    const auto qs = ctx.config.numbers("fourier.q", {3.0, 6.0});
    const fourier::CantorTransform transform(params, J);
    const auto grid = fourier::SpectralGrid::sample(
        1, spacing, half,
        [&](const std::vector<double>& xi) {
            const auto v = transform(xi[0]);
            return std::make_pair(v.value, v.error_bound);
        },
        ctx.config.jobs);
    {
        auto out = ctx.open("spectrum.csv");
        fourier::write_spectral_csv(out, grid);
    }
    fourier::OctaveQuadrature quad;
    quad.panel_width = ctx.config.number("fourier.panel_width", 0.5);
    quad.jobs = ctx.config.jobs;
    for (double q : qs) {
        const auto d = fourier::lq_annulus_diagnostics_1d([&](double xi) { return std::abs(transform(xi).value); }, q,
                                                          j0, j1, quad);
        std::ostringstream name;
        name << q;
        auto out = ctx.open("annulus_q" + name.str() + ".csv");
        out << "octave,lower,upper,integral\n";
        for (const auto& o : d.octaves) out << o.octave << ',' << o.lower << ',' << o.upper << ',' << o.integral << '\n';
        ctx.record.metric("trend_ratio_q" + name.str(), d.trend_ratio, "ratio", "geometric mean of the last four octave ratios");
        ctx.record.metric("summable_like_q" + name.str(), d.verdict == fourier::Trend::summable_like ? 1.0 : 0.0, "bool");
    }
    const double base = std::abs(transform(kPi).value);
    double deviation = 0.0;
    for (int k = 0; k <= 8; ++k) deviation = std::max(deviation, std::abs(std::abs(transform(std::pow(3.0, k) * kPi).value) - base));
    ctx.record.metric("abs_at_pi", base, "1", "nu^(0) = 1");
    ctx.record.metric("max_dev_3k_pi", deviation, "1", "max_k ||nu^(3^k pi)| - |nu^(pi)||, k = 0..8");
    ctx.record.metric("truncation_error_at_edge", transform(spacing * half).error_bound, "1", "|xi| eta_1 ... eta_J");
}

void run_mollify(Context& ctx) {
    const auto& c = ctx.config;
    const int n = c.integer("mollify.n", 2);
    const double alpha = c.number("mollify.alpha", 1.0);
    const double p = c.number("mollify.p", 2.0 * n / alpha);
    const double r_min = c.number("mollify.r_min", 1.0);
    const double r_max = c.number("mollify.r_max", 16.0);
    const int j_min = c.integer("mollify.j_min", -16);
    const int j_max = c.integer("mollify.j_max", 6);
    const double eps_max = c.number("mollify.eps_max", 0.25);
    const double ratio = c.number("mollify.eps_ratio", 0.5);
    const int count = c.integer("mollify.eps_count", 7);
    geometry::ScaleSweep schedule{eps_max, ratio, count};
    schedule.validate();
    const auto eps = schedule.scales();

    const fourier::BumpFunction chi(n);
    const auto profile = fourier::bump_profile(chi, alpha, j_min, j_max, 64, c.jobs);
    {
        auto out = ctx.open("profile.csv");
        out << "j,a,sup_abs_hat,argmax,partial_sum\n";
        for (int j = j_min; j <= j_max; ++j) {
            const auto k = static_cast<std::size_t>(j - j_min);
            out << j << ',' << profile.a[k] << ',' << profile.sup_abs_hat[k] << ',' << profile.argmax[k] << ','
                << profile.partial_sums[k] << '\n';
        }
    }
    const auto f = fourier::RadialFunction::bessel_surrogate(r_min, r_max, p);
    const auto sweep = fourier::mollifier_sum(f, profile, eps, c.number("mollify.panel_width", 0.25), c.jobs);
    {
        auto out = ctx.open("mollifier.csv");
        fourier::write_mollifier_csv(out, sweep);
    }
    {
        auto out = ctx.open("sums.csv");
        out << "eps,sum\n";
        for (std::size_t e = 0; e < eps.size(); ++e) out << eps[e] << ',' << sweep.sums[e] << '\n';
    }
    bool monotone = true;
    for (std::size_t e = 0; e + 1 < sweep.sums.size(); ++e) monotone = monotone && sweep.sums[e + 1] <= sweep.sums[e];
    const bool tails = std::all_of(sweep.fixed_j_tail_monotone.begin(), sweep.fixed_j_tail_monotone.end(), [](bool b) { return b; });
    ctx.record.metric("profile_limit", profile.limit_estimate, "1", "sum_j a_j");
    ctx.record.metric("cauchy_index", profile.cauchy_index, "1");
    ctx.record.metric("f_p_norm", sweep.f_p_norm, "1", "L^p norm over [r_min, r_max]");
    ctx.record.metric("holder_constant", sweep.holder_constant, "1");
    ctx.record.metric("worst_bound_ratio", sweep.worst_bound_ratio, "ratio", "max b / (C ||f||_p^2)");
    ctx.record.metric("sum_initial", sweep.sums.front(), "1");
    ctx.record.metric("sum_final", sweep.sums.back(), "1");
    ctx.record.metric("final_over_initial", sweep.final_over_initial, "ratio");
    ctx.record.flag("sums_decreasing", monotone);
    ctx.record.flag("final_over_initial_le_0.1", sweep.final_over_initial <= 0.1);
    ctx.record.flag("fixed_j_tail_monotone", tails);
    ctx.record.flag("uniform_bound", sweep.uniform_bound_holds);
    ctx.record.note("witness", f.label);
    ctx.record.note("sup_sampling", std::to_string(profile.samples_per_octave) +
                                        " radial samples per octave plus golden-section refinement");
    {
        nlohmann::ordered_json summary;
        summary["eps"] = sweep.eps;
        summary["sums"] = sweep.sums;
        summary["final_over_initial"] = sweep.final_over_initial;
        summary["holder_constant"] = sweep.holder_constant;
        summary["worst_bound_ratio"] = sweep.worst_bound_ratio;
        auto flags = nlohmann::ordered_json::object();
        flags["sums_decreasing"] = monotone;
        flags["sums_decreasing_after_transient"] = sweep.sums_decreasing_after_transient;
        flags["final_over_initial_le_0.1"] = sweep.final_over_initial <= 0.1;
        flags["fixed_j_tail_monotone"] = tails;
        flags["uniform_bound"] = sweep.uniform_bound_holds;
        summary["flags"] = std::move(flags);
        auto out = ctx.open("mollifier.json");
        out << summary.dump(2) << '\n';
    }

    // mollified pairing against the middle-thirds measure on the line
    const auto measure = fractal::natural_measure(fractal::CantorParams::middle_thirds(), c.integer("mollify.pairing_level", 8));
    const fourier::BumpFunction chi1(1);
    const fourier::TestFunction psi{{0.5}, 0.6};
    auto out = ctx.open("pairing.csv");
    out << "eps,pairing,bound,limit\n";
    bool within = true;
    for (double e : c.numbers("mollify.pairing_eps", {1.0 / 8, 1.0 / 32, 1.0 / 128})) {
        const auto r = fourier::mollified_pairing(measure.measure, psi, chi1, e);
        out << e << ',' << r.pairing << ',' << r.bound << ',' << r.limit_value << '\n';
        within = within && std::abs(r.pairing) <= r.bound * (1.0 + 1e-9);
    }
    ctx.record.flag("pairing_within_bound", within);
}

void run_tauberian(Context& ctx) {
    const auto& c = ctx.config;
    const std::uint64_t seed = c.seed.value_or(0);
    const int m = c.integer("tauberian.m", 16);
    const int trials = c.integer("tauberian.trials", 100);
    int matches = 0;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(detail::task_seed(seed, static_cast<std::uint64_t>(t)));
        const auto trial = detail::random_span_trial(m, rng);
        const int oracle = tauberian::span_dimension_oracle(trial.f);
        if (oracle == tauberian::circulant_rank(trial.f) && oracle == m - trial.designed_zeros) ++matches;
        if (t == 0) {
            auto header = ctx.open("trial0.json");
            tauberian::write_grid_header(header, trial.f);
            auto body = ctx.open("trial0.csv");
            tauberian::write_grid_csv(body, trial.f);
        }
    }
    ctx.record.metric("span_trials", trials, "count");
    ctx.record.metric("span_matches", matches, "count");
    ctx.record.flag("span_oracle_agrees", matches == trials);

    const int sphere_m = c.integer("tauberian.sphere_m", 256);
    const auto designed = detail::cantor_design_radii();
    const auto f = detail::designed_radial_zeros(sphere_m, designed);
    const auto zeros = tauberian::spherical_zero_radii(f);
    int hits = 0, false_radii = 0;
    for (double r : zeros.radii) {
        if (std::binary_search(designed.begin(), designed.end(), static_cast<int>(std::lround(r))))
            ++hits;
        else
            ++false_radii;
    }
    {
        auto out = ctx.open("radii.csv");
        out << "radius,designed\n";
        for (double r : zeros.radii)
            out << r << ',' << std::binary_search(designed.begin(), designed.end(), static_cast<int>(std::lround(r))) << '\n';
    }
    const double recall = static_cast<double>(hits) / static_cast<double>(designed.size());
    ctx.record.metric("designed_radii", static_cast<double>(designed.size()), "count");
    ctx.record.metric("recall", recall, "ratio");
    ctx.record.metric("false_radii", false_radii, "count");
    ctx.record.flag("recall_ge_0.9", recall >= 0.9);
    ctx.record.flag("no_false_radii", false_radii == 0);

    // dimension estimates drive the verdict rows
    const auto params = c.cantor();
    const int level = c.integer("tauberian.level", 7);
    // the finest scale must stay ~9x above the level length, or counts saturate
    const auto sweep = c.sweep({1.0 / 9.0, 1.0 / 3.0, 4});
    const auto line = geometry::box_dimension_estimate(fractal::ProductSet(fractal::build_level(params, level), 1).sample(),
                                                       sweep, geometry::CountMode::greedy, c.jobs);
    const auto plane = geometry::box_dimension_estimate(fractal::ProductSet(fractal::build_level(params, level), 2).sample(),
                                                        sweep, geometry::CountMode::greedy, c.jobs);
    auto ci = [](const geometry::DimensionFit& fit, double cap) {
        const double w = 2.0 * fit.slope_stderr;
        return tauberian::DimensionInput{fit.slope, std::max(0.0, fit.slope - w), std::min(cap, fit.slope + w)};
    };
    const auto rows = tauberian::build_verdicts(2, ci(line, 2.0), ci(plane, 2.0));
    {
        auto out = ctx.open("verdicts.json");
        out << tauberian::verdicts_to_json(rows) << '\n';
    }
    ctx.record.metric("beta_hat", line.slope, "1", "box dimension of the radial set");
    ctx.record.metric("alpha_hat", plane.slope, "1", "box dimension of the product zero set");
    for (const auto& r : rows) {
        if (r.reference || !r.conclusive) continue;
        ctx.record.metric(r.theorem + ".p_lo", r.interval.lo, "exponent");
        ctx.record.metric(r.theorem + ".p_hi", r.interval.hi, "exponent");
    }
}

}  // namespace

ReportRecord run(const ExperimentConfig& config) {
    static const std::map<std::string, std::function<void(Context&)>> table{
        {"construct", run_construct}, {"dim", run_dim},         {"minkowski", run_minkowski},
        {"fourier", run_fourier},     {"mollify", run_mollify}, {"tauberian", run_tauberian}};
    const auto it = table.find(config.id);
    if (it == table.end()) throw ConfigError("unknown experiment '" + config.id + "'");

    ReportRecord record;
    record.id = config.id;
    record.digest = hex_digest(fnv1a64(config.canonical()));
    record.note("seed", config.seed ? std::to_string(*config.seed) : "none");
    Context ctx{config, config.out / config.id, record};
    fs::create_directories(ctx.dir);

    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(ctx);
    } catch (const ConfigError& e) {
        throw ConfigError(config.id + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(config.id + ": " + e.what());
    } catch (const SizeError& e) {
        throw SizeError(config.id + ": " + e.what());
    } catch (const PrecisionError& e) {
        throw PrecisionError(config.id + ": " + e.what());
    } catch (const RetryError& e) {
        throw RetryError(config.id + ": " + e.what());
    }
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream report(ctx.dir / "report.json");
    report << report_to_json(record);
    std::ofstream timing(ctx.dir / "timing.json");
    timing << "{\"wall_seconds\": " << record.wall_seconds << "}\n";
    return record;
}

}  // namespace fracspec::experiments
