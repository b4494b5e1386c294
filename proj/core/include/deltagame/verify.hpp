#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deltagame::verify {

enum class Level { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the verification suite; `quick` skips the long seeded searches.
std::vector<CriterionResult> run_suite(Level level, std::uint64_t seed = 42);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace deltagame::verify
