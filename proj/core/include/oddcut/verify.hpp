#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddcut {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int d = 2;
    long long max_n = 16;
    int jobs = 1;
    std::uint64_t seed = 20240901;
    bool thorough = false;  // acceptance-scale statistics for the sampler suite
};

std::vector<std::string> suite_names();

// Suites: lemmas, constructions, approx, covers, separation, sampler,
// bounds, all.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace oddcut
