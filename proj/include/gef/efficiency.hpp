#pragma once

#include <cstdint>
#include <optional>

#include "gef/exact.hpp"
#include "gef/model.hpp"

namespace gef {

// Sum over resources of the largest utility any agent has for it.
Utility max_welfare_bound(const Instance& inst);

// Searches all (n+1)^m allocations for a dominating one. nullopt when the
// node budget runs out.
std::optional<bool> is_pareto_efficient(const Instance& inst, const Allocation& alloc,
                                        std::int64_t budget = kDefaultBudget);

// goal must be Pareto or MaxWelfare. MaxWelfare means the largest welfare
// among allocations satisfying the notion.
SolveResult solve_efficient(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                            std::int64_t budget = kDefaultBudget);

}  // namespace gef
