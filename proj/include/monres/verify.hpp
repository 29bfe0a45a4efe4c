#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace monres {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, empty on pass
};

struct VerifyOptions {
    std::filesystem::path fixture_dir;
    std::uint64_t seed = 7;
    int generic_count = 200;
    int nongeneric_count = 100;
    bool run_sweeps = true;
};

/// The acceptance checks: fixture-pinned results plus the randomized
/// property sweeps.  Returns one result per check.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace monres
