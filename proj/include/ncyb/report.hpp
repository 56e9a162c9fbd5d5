// Check reporting: every verification suite appends named check results to a
// Report, which the CLI serializes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncyb {

struct CheckResult {
    std::string name;
    std::string anchor;
    std::string status; // "pass", "fail", or "skipped-singular"
    std::string detail; // empty unless there is something to say
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    void add(std::string name, std::string anchor, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), std::move(anchor), ok ? "pass" : "fail",
                          std::move(detail)});
    }
    void skip(std::string name, std::string anchor, std::string detail = {}) {
        checks.push_back(
            {std::move(name), std::move(anchor), "skipped-singular", std::move(detail)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
    std::string status() const { return ok() ? "pass" : "fail"; }
};

enum class Mode { symbolic, numeric, dual };

struct SuiteConfig {
    int n = 3;
    Mode mode = Mode::symbolic;
    std::uint64_t seed = 1;
    int trunc_order = 12;
    int samples = 100;
};

} // namespace ncyb
