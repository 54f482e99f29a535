#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fcq {

/// Outcome of one named identity or centrality check. `witness` is filled
/// only on failure and carries a printable counterexample.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;
};

/// Structured pass/fail record for a family of checks.
struct VerificationReport {
    std::string name;
    std::vector<CheckResult> checks;

    void add(std::string check, bool ok, std::string witness = {})
    {
        checks.push_back({std::move(check), ok, ok ? std::string{} : std::move(witness)});
    }

    void merge(const VerificationReport& other)
    {
        for (const auto& c : other.checks)
            checks.push_back({other.name.empty() ? c.name : other.name + "/" + c.name, c.passed, c.witness});
    }

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& c : checks)
            n += c.passed ? 0 : 1;
        return n;
    }

    /// One line per failing check, with its witness.
    std::string failure_summary() const
    {
        std::string out;
        for (const auto& c : checks)
            if (!c.passed)
                out += c.name + (c.witness.empty() ? "" : ": " + c.witness) + "\n";
        return out;
    }
};

} // namespace fcq
