#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcrit/branching.hpp"

namespace lcrit {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 200;
    Int max_entry = 10;
    // Shifts the closed-form m+ by one at the first place; used to check that
    // the harness notices.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // first few failures only

    bool ok() const { return failures == 0; }
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool ok() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

// Sym³ critical set from the Gamma factors of L(s, Sym³) and its dual,
// scanned over m. Independent of the closed form.
CriticalSet sym3_gamma_scan(const Weight& mu);

}  // namespace lcrit
