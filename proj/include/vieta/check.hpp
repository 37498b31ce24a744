#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace vieta {

/// Outcome of one named exact check over an index range.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<long> first_violation;  // index of the first failing case
    std::string detail;

    void fail_at(long index, std::string why) {
        if (!pass) return;
        pass = false;
        first_violation = index;
        detail = std::move(why);
    }
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace vieta
