#include "sphereval/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>

using namespace sphereval;

int main(int argc, char** argv) {
    VerifyConfig cfg;
    cfg.dims = {3, 4, 5};
    bool verbose = false;
    for (int a = 1; a < argc; ++a)
        if (std::strcmp(argv[a], "-v") == 0) verbose = true;

    int failed = 0;
    for (int c = 1; c <= criterion_count; ++c) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto checks = run_criterion(c, cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = !checks.empty();
        double worst = 0.0;
        for (const auto& r : checks) {
            ok = ok && r.pass;
            if (r.tolerance > 0.0) worst = std::max(worst, r.residual / r.tolerance);
        }
        std::printf("[%s] criterion %2d  %-42s %3zu checks  worst residual/tol %.2e  (%.1fs)\n", ok ? "PASS" : "FAIL", c,
                    criterion_title(c), checks.size(), worst, secs);
        for (const auto& r : checks)
            if (!r.pass || verbose)
                std::printf("    %s %-36s residual %.3e tol %.1e  %s\n", r.pass ? "ok  " : "FAIL", r.check.c_str(),
                            r.residual, r.tolerance, r.detail.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    std::printf("%d of %d criteria passed\n", criterion_count - failed, criterion_count);
    return failed ? 1 : 0;
}
