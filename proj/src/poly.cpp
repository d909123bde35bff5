#include "gef/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gef/graph.hpp"

namespace gef {

SolveResult feasible_result(const Instance& inst, Allocation alloc, const char* algorithm,
                            std::int64_t nodes) {
    SolveResult r;
    r.verdict = Verdict::Feasible;
    r.welfare = utilitarian_welfare(inst, alloc);
    r.allocation = std::move(alloc);
    r.algorithm = algorithm;
    r.nodes = nodes;
    return r;
}

SolveResult infeasible_result(const char* algorithm, std::int64_t nodes) {
    SolveResult r;
    r.verdict = Verdict::Infeasible;
    r.algorithm = algorithm;
    r.nodes = nodes;
    return r;
}

bool strongly_connected(const Instance& inst) {
    return inst.n() >= 1 && scc_condensation(inst).components.size() == 1;
}

SolveResult solve_gef_dag(const Instance& inst) {
    const Digraph g = digraph_of(inst);
    if (has_cycle(g)) throw GuardViolation("dag: attention graph has a cycle");
    if (inst.n() == 0) {
        if (inst.m() == 0) return feasible_result(inst, Allocation(0), "dag");
        return infeasible_result("dag");
    }
    int source = 0;
    while (!g.in[source].empty()) ++source;
    return feasible_result(inst, Allocation(std::vector<int>(inst.m(), source)), "dag");
}

SolveResult solve_gef_id01_scc(const Instance& inst) {
    const StrippedInstance s = strip_zero_resources(inst);
    if (classify_preferences(s.inst).cls != PreferenceClass::IdenticalZeroOne)
        throw GuardViolation("scc-id01: preferences are not identical 0/1");
    if (!strongly_connected(inst)) throw GuardViolation("scc-id01: graph not strongly connected");
    const int n = inst.n(), m = s.inst.m();
    if (m % n != 0) return infeasible_result("scc-id01");
    Allocation small(m);
    const int share = m / n;
    for (int r = 0; r < m; ++r) small.owner[r] = r / share;
    return feasible_result(inst, lift_allocation(s, small, inst.m(), 0), "scc-id01");
}

SolveResult solve_sgef_id01(const Instance& inst) {
    const StrippedInstance s = strip_zero_resources(inst);
    if (classify_preferences(s.inst).cls != PreferenceClass::IdenticalZeroOne)
        throw GuardViolation("alg1: preferences are not identical 0/1");
    const int n = inst.n(), m = s.inst.m();
    if (n == 0) {
        if (inst.m() == 0) return feasible_result(inst, Allocation(0), "alg1");
        return infeasible_result("alg1");
    }
    if (n == 1) return feasible_result(inst, Allocation(std::vector<int>(inst.m(), 0)), "alg1");
    const auto labels = longest_path_labels(inst);
    if (!labels) return infeasible_result("alg1");
    const long long need = std::accumulate(labels->begin(), labels->end(), 0LL);
    if (m < need) return infeasible_result("alg1");
    const Digraph g = digraph_of(inst);
    int first_free = 0;
    while (!g.in[first_free].empty()) ++first_free;
    Allocation small(m);
    int next = 0;
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < (*labels)[a]; ++k) small.owner[next++] = a;
    while (next < m) small.owner[next++] = first_free;
    return feasible_result(inst, lift_allocation(s, small, inst.m(), 0), "alg1");
}

SolveResult solve_sgef_identical_manyvalues(const Instance& inst) {
    const StrippedInstance s = strip_zero_resources(inst);
    const PreferenceProfile p = classify_preferences(s.inst);
    if (!is_identical(p.cls)) throw GuardViolation("manyvalues: preferences are not identical");
    const Digraph g = digraph_of(inst);
    const auto order = topological_order(g);
    if (!order) throw GuardViolation("manyvalues: attention graph has a cycle");
    const int n = inst.n(), m = s.inst.m();
    if (n == 0) {
        if (inst.m() == 0) return feasible_result(inst, Allocation(0), "manyvalues");
        return infeasible_result("manyvalues");
    }
    if (n > 1 && p.u_diff <= n) throw GuardViolation("manyvalues: too few distinct values");

    // Lowest-index resource of each of the n largest distinct values.
    const auto& row = s.inst.rows.empty() ? std::vector<Utility>{} : s.inst.rows[0];
    std::vector<std::pair<Utility, int>> firsts;
    std::set<Utility> seen;
    for (int r = 0; r < m; ++r)
        if (seen.insert(row[r]).second) firsts.emplace_back(row[r], r);
    std::sort(firsts.begin(), firsts.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    Allocation small(m);
    int source = 0;
    while (!g.in[source].empty()) ++source;
    for (int k = 0; k < n && k < static_cast<int>(firsts.size()); ++k)
        small.owner[firsts[k].second] = (*order)[k];
    for (int r = 0; r < m; ++r)
        if (small.owner[r] == kUnassigned) small.owner[r] = source;
    return feasible_result(inst, lift_allocation(s, small, inst.m(), source), "manyvalues");
}

SolveResult solve_efficient_dag(const Instance& inst, EfficiencyGoal goal) {
    const Digraph g = digraph_of(inst);
    if (has_cycle(g)) throw GuardViolation("alg2: attention graph has a cycle");
    if (goal == EfficiencyGoal::Complete) throw GuardViolation("alg2: goal must be pareto or welfare");
    if (goal == EfficiencyGoal::MaxWelfare && !is_zero_one(classify_preferences(inst).cls))
        throw GuardViolation("alg2: max welfare needs 0/1 preferences");
    const int n = inst.n(), m = inst.m();
    std::vector<char> alive(n, 1), remaining(m, 1);
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.in[v].size());
    Allocation alloc(m);
    std::int64_t steps = 0;
    int left = m;
    while (left > 0) {
        ++steps;
        for (int a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            bool positive = false;
            for (int r = 0; r < m && !positive; ++r) positive = remaining[r] && inst.u(a, r) > 0;
            if (!positive) {
                alive[a] = 0;
                for (int w : g.out[a]) --indeg[w];
            }
        }
        // First resource some current zero-in-degree agent values positively; its
        // first best valuer among those agents receives it.
        int pick_r = -1, pick_a = -1;
        for (int r = 0; r < m && pick_r < 0; ++r) {
            if (!remaining[r]) continue;
            Utility best = 0;
            for (int a = 0; a < n; ++a)
                if (alive[a] && indeg[a] == 0 && inst.u(a, r) > best) {
                    best = inst.u(a, r);
                    pick_a = a;
                }
            if (pick_a >= 0) pick_r = r;
        }
        if (pick_r < 0) break;  // nobody left values any remaining resource
        alloc.owner[pick_r] = pick_a;
        remaining[pick_r] = 0;
        --left;
    }
    return feasible_result(inst, std::move(alloc), "alg2", steps);
}

}  // namespace gef
