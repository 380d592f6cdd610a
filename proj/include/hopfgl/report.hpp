#ifndef HOPFGL_REPORT_HPP
#define HOPFGL_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace hopfgl
{

struct CheckResult {
    std::string name;
    bool passed = false;
    // First discrepancy for failures, empty otherwise.
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
    }

    const CheckResult *find(const std::string &name) const
    {
        for (const auto &c : checks) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

} // namespace hopfgl

#endif
