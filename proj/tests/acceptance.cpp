// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Profiles: fast (skips the 66-quadric kernel and the P^31
// tangential case), full (adds the kernel), slow (everything).

#include <cstdio>
#include <cstring>
#include <string>

#include "char2/runner.hpp"

int main(int argc, char** argv) {
    std::string profile = "slow";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--profile") == 0 && i + 1 < argc) profile = argv[++i];
    }

    std::vector<char2::CriterionResult> results;
    try {
        results = char2::run_acceptance(profile);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite failed to run: %s\n", e.what());
        return 2;
    }

    int passed = 0;
    for (const auto& r : results) {
        if (r.ok) ++passed;
        std::printf("[%s] %02d  %-62s (%ld ms%s)\n", r.ok ? "PASS" : "FAIL", r.id,
                    r.label.c_str(), r.elapsed_ms,
                    r.limit_ms > 0 ? (", limit " + std::to_string(r.limit_ms)).c_str() : "");
        if (!r.ok && !r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
    }
    std::printf("acceptance: %d/%zu passed (profile %s)\n", passed, results.size(),
                profile.c_str());
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
