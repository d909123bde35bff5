#pragma once

#include <cstdint>
#include <vector>

#include "gef/model.hpp"

namespace gef {

constexpr std::int64_t kDefaultBudget = 100'000'000;

// Exhaustive search. Complete: all n^m total assignments. Pareto/MaxWelfare:
// all (n+1)^m partial ones, "unassigned" ordered after the last agent.
// Resource 0 varies slowest.
SolveResult brute_force(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                        std::int64_t budget = kDefaultBudget);

struct ResourceTypeTable {
    std::vector<std::vector<Utility>> types;  // types[t][agent]
    std::vector<int> multiplicity;
    std::vector<int> type_of;  // resource -> type
};

ResourceTypeTable resource_types(const Instance& inst);

struct IlpModel {
    int n = 0;
    int m = 0;
    ResourceTypeTable table;
    std::vector<Arc> arcs;
    Utility delta = 0;
    std::vector<std::vector<char>> forbidden;  // [agent][type]

    int variable_count() const { return n * static_cast<int>(table.types.size()); }
    int equality_rows() const { return static_cast<int>(table.types.size()); }
    int inequality_rows() const { return static_cast<int>(arcs.size()); }
};

IlpModel build_type_ilp(const Instance& inst, FairnessNotion notion,
                        const std::vector<std::pair<int, int>>& forbidden = {});

// Depth-first search over type counts; complete, no budget.
SolveResult solve_type_ilp(const IlpModel& model);

// Weak, complete; identical preferences on a strongly connected graph.
SolveResult solve_identical_enum(const Instance& inst, std::int64_t budget = kDefaultBudget);

struct PrunedInstance {
    Instance inst;
    std::vector<int> kept;     // new agent index -> old agent index
    std::vector<int> removed;  // old agent indices that receive nothing
};

PrunedInstance prune_large_sccs(const Instance& inst, int m_effective);

// Strict, complete; general preferences and graphs. Five-case enumeration.
SolveResult solve_sgef_fpt_resources(const Instance& inst, std::int64_t budget = kDefaultBudget);

}  // namespace gef
