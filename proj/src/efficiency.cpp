#include "gef/efficiency.hpp"

#include <algorithm>
#include <functional>

#include "gef/dispatch.hpp"
#include "gef/graph.hpp"
#include "gef/poly.hpp"

namespace gef {

Utility max_welfare_bound(const Instance& inst) {
    Utility total = 0;
    for (int r = 0; r < inst.m(); ++r) {
        Utility best = 0;
        for (const auto& row : inst.rows) best = std::max(best, row[r]);
        total += best;
    }
    return total;
}

std::optional<bool> is_pareto_efficient(const Instance& inst, const Allocation& alloc,
                                        std::int64_t budget) {
    const int n = inst.n(), m = inst.m();
    const std::vector<Utility> target = agent_utilities(inst, alloc);
    // rest[a][r]: what agent a could still gain from resources r..m-1.
    std::vector<std::vector<Utility>> rest(n, std::vector<Utility>(m + 1, 0));
    for (int a = 0; a < n; ++a)
        for (int r = m - 1; r >= 0; --r) rest[a][r] = rest[a][r + 1] + inst.u(a, r);
    std::vector<Utility> own(n, 0);
    std::int64_t nodes = 0;
    bool over = false;
    std::function<bool(int)> dfs = [&](int r) {
        for (int a = 0; a < n; ++a)
            if (own[a] + rest[a][r] < target[a]) return false;
        if (r == m) {
            for (int a = 0; a < n; ++a)
                if (own[a] > target[a]) return true;
            return false;
        }
        for (int o = 0; o <= n; ++o) {
            if (++nodes > budget) {
                over = true;
                return false;
            }
            if (o < n) own[o] += inst.u(o, r);
            const bool hit = dfs(r + 1);
            if (o < n) own[o] -= inst.u(o, r);
            if (hit) return true;
            if (over) return false;
        }
        return false;
    };
    const bool dominated = dfs(0);
    if (over) return std::nullopt;
    return !dominated;
}

namespace {

SolveResult named(SolveResult r, const std::string& prefix) {
    r.algorithm = prefix + ":" + r.algorithm;
    return r;
}

}  // namespace

SolveResult solve_efficient(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                            std::int64_t budget) {
    if (goal == EfficiencyGoal::Complete)
        throw GuardViolation("efficiency: goal must be pareto or welfare");
    const PreferenceClass cls = classify_preferences(inst).cls;

    if (is_identical(cls)) {
        SolveResult r = solve(inst, notion, EfficiencyGoal::Complete, "auto", budget);
        if (r.verdict == Verdict::BudgetExceeded || r.feasible() || goal == EfficiencyGoal::Pareto)
            return named(r, "complete");
        return brute_force(inst, notion, goal, budget);
    }
    if (is_zero_one(cls)) {
        const ResourceTypeTable table = resource_types(inst);
        std::vector<std::pair<int, int>> forbidden;
        for (int t = 0; t < static_cast<int>(table.types.size()); ++t) {
            const Utility best = *std::max_element(table.types[t].begin(), table.types[t].end());
            for (int a = 0; a < inst.n(); ++a)
                if (table.types[t][a] < best) forbidden.emplace_back(a, t);
        }
        SolveResult r = solve_type_ilp(build_type_ilp(inst, notion, forbidden));
        if (r.feasible() || goal == EfficiencyGoal::Pareto) return r;
        return brute_force(inst, notion, goal, budget);
    }
    if (notion == FairnessNotion::Weak && !has_cycle(digraph_of(inst)) &&
        goal == EfficiencyGoal::Pareto)
        return solve_efficient_dag(inst, goal);
    return brute_force(inst, notion, goal, budget);
}

}  // namespace gef
