#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pdskit::verify {

enum class Level { Quick, Full };

/// "quick" or "full"; anything else throws InputError.
Level parse_level(std::string_view name);
const char* to_string(Level level) noexcept;

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // a check that runs over budget fails
};

/// Ids of the checks run at `level`, in order. Full adds the S_3 checks.
std::vector<int> check_ids(Level level);

/// Quick shrinks the exhaustive and randomized checks; full runs them at
/// acceptance scale. Exceptions inside a check are reported as a failure.
CheckResult run_check(int id, Level level, unsigned jobs = 1);

std::vector<CheckResult> run_all(Level level, unsigned jobs = 1);

/// "PASS  3 lower-bound-construction  0.42s/120s  (4,2): 3 >= 3; ..."
std::string format_line(const CheckResult& r);

}  // namespace pdskit::verify
