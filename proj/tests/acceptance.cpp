// Acceptance gate: runs every desk-scale criterion at its stated tolerance
// and prints one pass/fail line per criterion.
#include <cstdio>
#include <cstring>
#include <string>

#include "turan/verify.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    uint64_t seed = 0;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::stoull(argv[++i]);
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            only = std::stoi(argv[++i]);
    }
    int failures = 0;
    double total = 0.0;
    for (int id = 1; id <= 14; ++id) {
        if (only && id != only) continue;
        const turan::CriterionResult r = turan::run_criterion(id, seed, quick);
        total += r.seconds;
        std::printf("%s criterion %2d: %s (%s) [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    std::printf("%s: %d failure(s), %.1fs total\n", failures ? "FAIL" : "PASS", failures,
                total);
    return failures ? 1 : 0;
}
