#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affine::verify {

/// One named check with its outcome and the exact values involved.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    long max_order = 10'000'000;     // censuses above this order are skipped
    int threads = 1;                 // oracle shard parallelism
    long samples = 100'000;          // draws per sampler statistic
    std::uint64_t seed = 20260819;   // base seed for sampler statistics
};

/// The acceptance criteria, numbered 1-9. Each returns one result per
/// sub-check; a criterion passes when all of its results pass.
std::vector<CheckResult> criterion_oracle_formula(const Options& o);   // 1
std::vector<CheckResult> criterion_series_vs_census(const Options& o); // 2
std::vector<CheckResult> criterion_limits(const Options& o);           // 3
std::vector<CheckResult> criterion_identities(const Options& o);       // 4
std::vector<CheckResult> criterion_measures(const Options& o);         // 5
std::vector<CheckResult> criterion_markov(const Options& o);           // 6
std::vector<CheckResult> criterion_samplers(const Options& o);         // 7
std::vector<CheckResult> criterion_fixed_space(const Options& o);      // 8
std::vector<CheckResult> criterion_bounds(const Options& o);           // 9

/// Composable CLI suites: identities, measures, samplers, oracle, bounds.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const Options& o);

}  // namespace affine::verify
