#pragma once

#include <string>
#include <vector>

#include "specht/dmodule.hpp"

namespace specht {

struct RunConfig {
    unsigned r = 1;
    unsigned n = 1;
    TwistConvention convention = TwistConvention::nu_minus_one;
    uint64_t seed = 0;
    uint64_t cap = 10000;
    bool force = false;  // bypass the cap
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    RunConfig config;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    unsigned passed() const;
};

// suite is one of: group, specht, idempotents, dmodule, all.
SuiteReport run_suite(const std::string& suite, const RunConfig& cfg);

std::string render_text(const SuiteReport& report);
std::string render_json(const SuiteReport& report);

// Stable string hash for deriving per-check RNG streams from the seed.
uint64_t fnv1a(const std::string& s);

}  // namespace specht
