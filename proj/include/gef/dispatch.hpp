#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gef/exact.hpp"
#include "gef/model.hpp"

namespace gef {

// Identifiers accepted by solve(); "auto" routes by instance class.
const std::vector<std::string>& algorithm_ids();

// Routing for "auto". May return "immediate-infeasible" or "efficiency".
std::string select_algorithm(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal);

// Throws GuardViolation when an explicit algorithm does not apply.
SolveResult solve(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                  const std::string& algorithm = "auto", std::int64_t budget = kDefaultBudget);

}  // namespace gef
