#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphereval {

struct CheckResult {
    int criterion = 0;
    std::string check;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyConfig {
    /// Dimensions for the dimension-parameterized checks. Checks tied to a
    /// fixed dimension always run at that dimension.
    std::vector<int> dims{3};
    int K = 32;
    int points = 128;
    std::uint64_t seed = 20240517;
    long mc_samples = 1000000;
};

constexpr int criterion_count = 11;

const char* criterion_title(int c);

/// All checks of criterion c (1..criterion_count). Exceptions become failed checks.
std::vector<CheckResult> run_criterion(int c, const VerifyConfig& cfg);

std::vector<CheckResult> run_all(const VerifyConfig& cfg);

} // namespace sphereval
