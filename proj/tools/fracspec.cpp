#include "fracspec/common/errors.hpp"
#include "fracspec/experiments/acceptance.hpp"
#include "fracspec/experiments/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace ex = fracspec::experiments;

namespace {

constexpr int kFailure = 1;
constexpr int kBadConfig = 2;

int run_experiment(const std::string& id, const std::string& config_path, std::optional<std::uint64_t> seed,
                   std::optional<std::string> out, std::optional<unsigned> jobs) {
    auto config = ex::load_config(config_path);
    if (!config.id.empty() && config.id != id)
        throw fracspec::ConfigError("config names experiment '" + config.id + "', command line says '" + id + "'");
    config.id = id;
    if (seed) config.seed = seed;
    if (out) config.out = *out;
    if (jobs) config.jobs = *jobs;
    const auto record = ex::run(config);
    std::cout << ex::report_to_json(record);
    std::cerr << id << ": " << record.wall_seconds << " s\n";
    return record.all_pass() ? 0 : kFailure;
}

int run_verify(const std::optional<std::string>& suite, std::optional<double> inject_beta, unsigned jobs,
               const std::optional<std::string>& summary) {
    ex::VerifyOptions options;
    options.suite = suite;
    options.inject_beta = inject_beta;
    options.jobs = jobs;
    const auto results = ex::run_acceptance(options);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.suite << ": " << r.detail << '\n';
        ok = ok && r.pass;
    }
    if (summary) {
        std::ofstream file(*summary);
        file << ex::acceptance_to_json(results);
    }
    return ok ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractal geometry and Fourier spectral experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<unsigned> jobs;
    for (const auto& id : ex::experiment_ids()) {
        auto* sub = app.add_subcommand(id, "Run the " + id + " experiment");
        sub->add_option("--config", config_path, "Key-value config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Seed for every random draw");
        sub->add_option("--out", out, "Output directory");
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    }

    std::optional<std::string> suite, summary;
    std::optional<double> inject_beta;
    unsigned verify_jobs = 1;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
    verify->add_option("--suite", suite, "Suite name or 'all'");
    verify->add_option("--inject-beta", inject_beta, "Wrong dimension for the Minkowski suite (fault injection)");
    verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--summary", summary, "Write a JSON summary here");
    verify->add_flag_callback("--list", [] {
        for (const auto& name : ex::suite_names()) std::cout << name << '\n';
        std::exit(0);
    }, "List suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kBadConfig;
    }

    try {
        if (verify->parsed()) return run_verify(suite, inject_beta, verify_jobs, summary);
        for (auto* sub : app.get_subcommands())
            return run_experiment(sub->get_name(), config_path, seed, out, jobs);
    } catch (const fracspec::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadConfig;
    } catch (const fracspec::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
