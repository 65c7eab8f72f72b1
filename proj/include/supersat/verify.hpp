#pragma once

#include "supersat/config.hpp"

#include <string>
#include <vector>

namespace supersat {
namespace verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // counts checked, plus witnesses on failure
    double seconds = 0;
};

// The acceptance suite: exact reproductions and bound checks at desk
// scale.  Each criterion is deterministic given (config, seed).
CriterionResult run_criterion(int id, const RunConfig& cfg);
std::vector<CriterionResult> run_all(const RunConfig& cfg);
int criterion_count();

} // namespace verify
} // namespace supersat
