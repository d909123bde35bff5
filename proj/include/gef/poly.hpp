#pragma once

#include "gef/model.hpp"

namespace gef {

// Fills welfare and algorithm name for a feasible witness.
SolveResult feasible_result(const Instance& inst, Allocation alloc, const char* algorithm,
                            std::int64_t nodes = 0);
SolveResult infeasible_result(const char* algorithm, std::int64_t nodes = 0);

// True iff the attention graph has exactly one strongly connected component.
bool strongly_connected(const Instance& inst);

// Weak, complete; acyclic graph. Everything goes to the lowest-index source.
SolveResult solve_gef_dag(const Instance& inst);

// Weak, complete; identical 0/1 preferences on a strongly connected graph.
SolveResult solve_gef_id01_scc(const Instance& inst);

// Strict, complete; identical 0/1 preferences. Longest-path labelling.
SolveResult solve_sgef_id01(const Instance& inst);

// Strict, complete; identical preferences, acyclic graph, more distinct values than agents.
SolveResult solve_sgef_identical_manyvalues(const Instance& inst);

// Weak; Pareto or max welfare on an acyclic graph (max welfare needs 0/1 preferences).
SolveResult solve_efficient_dag(const Instance& inst, EfficiencyGoal goal);

}  // namespace gef
