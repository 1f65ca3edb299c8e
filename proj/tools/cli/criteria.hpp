#pragma once

#include <cstdint>
#include <string>

#include "table.hpp"

namespace gravheun::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;           // short slug, e.g. "exact_spectrum"
    std::string title;
    bool checks_passed = false;
    double seconds = 0.0;       // wall time of the timed part
    double time_limit = 0.0;
    std::string detail;         // deterministic summary line
    cli::Table table;           // the numbers behind the verdict

    bool within_time() const { return seconds < time_limit; }
    bool passed() const { return checks_passed && within_time(); }
};

constexpr int kCriterionCount = 9;

// Slug for a criterion id, usable as a test name.
std::string criterion_name(int id);

// std::invalid_argument for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed);

}  // namespace gravheun::acceptance
