#pragma once

#include <string>
#include <vector>

namespace shellkit {

/// Outcome of one verification; counterexample holds the first failure with
/// full context, empty when the check passed.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string counterexample;
};

/// Bundle of checks for one instance (layout, d, M where applicable).
struct VerificationReport {
    std::string instance;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string counterexample = "") {
        checks.push_back({std::move(name), pass, std::move(counterexample)});
    }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }
};

}  // namespace shellkit
