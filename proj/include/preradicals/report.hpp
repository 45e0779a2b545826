#pragma once

#include <string>
#include <vector>

namespace preradicals {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Aggregated outcome of an exhaustive verification battery.
/// Failures are report entries, not exceptions.
struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            n += c.pass ? 0 : 1;
        return n;
    }
};

} // namespace preradicals
