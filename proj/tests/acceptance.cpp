// Runs every acceptance criterion and prints one line per criterion.

#include "fracspec/experiments/acceptance.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <thread>

int main() {
    using namespace fracspec::experiments;
    try {
        VerifyOptions options;
        options.jobs = std::max(1u, std::thread::hardware_concurrency());
        const auto results = run_acceptance(options);
        int failed = 0;
        for (const auto& r : results) {
            std::printf("%s [%d] %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.suite.c_str(), r.detail.c_str(),
                        r.seconds);
            if (!r.pass) ++failed;
        }
        std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 1;
    }
}
