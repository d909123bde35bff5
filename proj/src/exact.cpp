#include "gef/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gef/graph.hpp"
#include "gef/poly.hpp"
#include "search.hpp"

namespace gef {

using detail::AssignmentSearch;

namespace {

SolveResult budget_result(const char* algorithm, std::int64_t nodes) {
    SolveResult r;
    r.verdict = Verdict::BudgetExceeded;
    r.algorithm = algorithm;
    r.nodes = nodes;
    return r;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// First fair total assignment over the given per-resource choices.
SolveResult first_fair(const Instance& inst, FairnessNotion notion,
                       const std::vector<std::vector<int>>& choices, std::int64_t budget,
                       const char* name) {
    if (inst.m() > 0 && std::any_of(choices.begin(), choices.end(),
                                    [](const auto& c) { return c.empty(); }))
        return infeasible_result(name);
    AssignmentSearch s(inst, budget);
    Allocation found;
    const auto outcome = s.run(choices, [&](const AssignmentSearch& st) {
        if (!st.fair(notion)) return false;
        found = Allocation(st.owner());
        return true;
    });
    if (outcome == AssignmentSearch::Outcome::Budget) return budget_result(name, s.nodes());
    if (outcome == AssignmentSearch::Outcome::Stopped)
        return feasible_result(inst, std::move(found), name, s.nodes());
    return infeasible_result(name, s.nodes());
}

SolveResult brute_complete(const Instance& inst, FairnessNotion notion, std::int64_t budget) {
    if (inst.m() == 0) {
        if (verify_fairness(inst, Allocation(0), notion)) return infeasible_result("brute");
        return feasible_result(inst, Allocation(0), "brute");
    }
    return first_fair(inst, notion, detail::same_choices(inst.m(), iota_vec(inst.n())), budget,
                      "brute");
}

SolveResult brute_welfare(const Instance& inst, FairnessNotion notion, std::int64_t budget) {
    const int m = inst.m();
    std::vector<int> owners = iota_vec(inst.n());
    owners.push_back(kUnassigned);
    // suffix[r]: best welfare still obtainable from resources r..m-1.
    std::vector<Utility> suffix(m + 1, 0);
    for (int r = m - 1; r >= 0; --r) {
        Utility best = 0;
        for (const auto& row : inst.rows) best = std::max(best, row[r]);
        suffix[r] = suffix[r + 1] + best;
    }
    AssignmentSearch s(inst, budget);
    Utility best = -1;
    Allocation found;
    const auto outcome = s.run(
        detail::same_choices(m, owners),
        [&](const AssignmentSearch& st) {
            if (st.welfare() > best && st.fair(notion)) {
                best = st.welfare();
                found = Allocation(st.owner());
            }
            return false;
        },
        [&](int r, Utility w) { return w + suffix[r] > best; });
    if (outcome == AssignmentSearch::Outcome::Budget) return budget_result("brute", s.nodes());
    if (best < 0) return infeasible_result("brute", s.nodes());
    return feasible_result(inst, std::move(found), "brute", s.nodes());
}

SolveResult brute_pareto(const Instance& inst, FairnessNotion notion, std::int64_t budget) {
    const int m = inst.m();
    std::vector<int> owners = iota_vec(inst.n());
    owners.push_back(kUnassigned);
    const auto choices = detail::same_choices(m, owners);

    std::set<std::vector<Utility>> vectors;
    AssignmentSearch all(inst, budget);
    if (all.run(choices, [&](const AssignmentSearch& st) {
            vectors.insert(st.own());
            return false;
        }) == AssignmentSearch::Outcome::Budget)
        return budget_result("brute", all.nodes());

    auto dominated = [&](const std::vector<Utility>& v) {
        for (const auto& w : vectors) {
            bool ge = true, gt = false;
            for (std::size_t i = 0; i < v.size() && ge; ++i) {
                if (w[i] < v[i]) ge = false;
                if (w[i] > v[i]) gt = true;
            }
            if (ge && gt) return true;
        }
        return false;
    };
    std::set<std::vector<Utility>> frontier;
    for (const auto& v : vectors)
        if (!dominated(v)) frontier.insert(v);

    AssignmentSearch s(inst, budget - all.nodes());
    Allocation found;
    const auto outcome = s.run(choices, [&](const AssignmentSearch& st) {
        if (!frontier.count(st.own()) || !st.fair(notion)) return false;
        found = Allocation(st.owner());
        return true;
    });
    const std::int64_t nodes = all.nodes() + s.nodes();
    if (outcome == AssignmentSearch::Outcome::Budget) return budget_result("brute", nodes);
    if (outcome == AssignmentSearch::Outcome::Stopped)
        return feasible_result(inst, std::move(found), "brute", nodes);
    return infeasible_result("brute", nodes);
}

}  // namespace

SolveResult brute_force(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                        std::int64_t budget) {
    switch (goal) {
        case EfficiencyGoal::Complete: return brute_complete(inst, notion, budget);
        case EfficiencyGoal::MaxWelfare: return brute_welfare(inst, notion, budget);
        case EfficiencyGoal::Pareto: return brute_pareto(inst, notion, budget);
    }
    return infeasible_result("brute");
}

ResourceTypeTable resource_types(const Instance& inst) {
    ResourceTypeTable t;
    std::map<std::vector<Utility>, int> index;
    t.type_of.resize(inst.m());
    for (int r = 0; r < inst.m(); ++r) {
        std::vector<Utility> col(inst.n());
        for (int i = 0; i < inst.n(); ++i) col[i] = inst.u(i, r);
        auto [it, fresh] = index.emplace(col, static_cast<int>(t.types.size()));
        if (fresh) {
            t.types.push_back(std::move(col));
            t.multiplicity.push_back(0);
        }
        t.type_of[r] = it->second;
        ++t.multiplicity[it->second];
    }
    return t;
}

IlpModel build_type_ilp(const Instance& inst, FairnessNotion notion,
                        const std::vector<std::pair<int, int>>& forbidden) {
    IlpModel model;
    model.n = inst.n();
    model.m = inst.m();
    model.table = resource_types(inst);
    model.arcs = inst.arcs;
    model.delta = notion == FairnessNotion::Strict ? 1 : 0;
    model.forbidden.assign(model.n, std::vector<char>(model.table.types.size(), 0));
    for (const auto& [agent, type] : forbidden) model.forbidden[agent][type] = 1;
    return model;
}

namespace {

class TypeSearch {
public:
    explicit TypeSearch(const IlpModel& model) : md_(model) {
        const int types = static_cast<int>(md_.table.types.size());
        order_.resize(types);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return md_.table.multiplicity[a] > md_.table.multiplicity[b];
        });
        x_.assign(md_.n, std::vector<int>(types, 0));
        lhs_.assign(md_.arcs.size(), 0);
        rhs_.assign(md_.arcs.size(), 0);
        pot_.assign(md_.n, 0);
        for (int t = 0; t < types; ++t)
            for (int a = 0; a < md_.n; ++a)
                pot_[a] += static_cast<Utility>(md_.table.multiplicity[t]) * md_.table.types[t][a];
        out_arcs_.resize(md_.n);
        in_arcs_.resize(md_.n);
        for (int k = 0; k < static_cast<int>(md_.arcs.size()); ++k) {
            out_arcs_[md_.arcs[k].first].push_back(k);
            in_arcs_[md_.arcs[k].second].push_back(k);
        }
    }

    bool run() {
        if (md_.n == 0) return md_.m == 0 && md_.arcs.empty();
        return place(0, 0, order_.empty() ? 0 : md_.table.multiplicity[order_[0]]);
    }

    const std::vector<std::vector<int>>& counts() const { return x_; }
    std::int64_t nodes() const { return nodes_; }

private:
    bool bounds_ok() const {
        for (int k = 0; k < static_cast<int>(md_.arcs.size()); ++k)
            if (lhs_[k] + pot_[md_.arcs[k].first] < rhs_[k] + md_.delta) return false;
        return true;
    }

    void apply(int t, int agent, int c, int sign) {
        x_[agent][t] += sign * c;
        const auto& col = md_.table.types[t];
        for (int a = 0; a < md_.n; ++a) pot_[a] -= sign * static_cast<Utility>(c) * col[a];
        for (int k : out_arcs_[agent]) lhs_[k] += sign * static_cast<Utility>(c) * col[agent];
        for (int k : in_arcs_[agent])
            rhs_[k] += sign * static_cast<Utility>(c) * col[md_.arcs[k].first];
    }

    bool can_absorb(int t, int from_agent) const {
        for (int a = from_agent; a < md_.n; ++a)
            if (!md_.forbidden[a][t]) return true;
        return false;
    }

    // Distribute `rem` units of the pos-th type among agents agent..n-1.
    bool place(int pos, int agent, int rem) {
        if (pos == static_cast<int>(order_.size())) return bounds_ok();
        const int t = order_[pos];
        if (agent == md_.n) {
            if (rem != 0) return false;
            const int next = pos + 1;
            return place(next, 0,
                         next < static_cast<int>(order_.size()) ? md_.table.multiplicity[order_[next]] : 0);
        }
        if (rem > 0 && !can_absorb(t, agent)) return false;
        const bool last = agent == md_.n - 1;
        const int lo = last ? rem : 0;
        const int hi = md_.forbidden[agent][t] ? 0 : rem;
        for (int c = lo; c <= hi; ++c) {
            ++nodes_;
            apply(t, agent, c, +1);
            if (bounds_ok() && place(pos, agent + 1, rem - c)) return true;
            apply(t, agent, c, -1);
        }
        return false;
    }

    const IlpModel& md_;
    std::vector<int> order_;
    std::vector<std::vector<int>> x_;
    std::vector<Utility> lhs_, rhs_, pot_;
    std::vector<std::vector<int>> out_arcs_, in_arcs_;
    std::int64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_type_ilp(const IlpModel& model) {
    TypeSearch search(model);
    if (!search.run()) return infeasible_result("ilp", search.nodes());
    // Deal resources of each type to agents in index order.
    Allocation alloc(model.m);
    const int types = static_cast<int>(model.table.types.size());
    std::vector<std::vector<int>> of_type(types);
    for (int r = 0; r < model.m; ++r) of_type[model.table.type_of[r]].push_back(r);
    for (int t = 0; t < types; ++t) {
        std::size_t next = 0;
        for (int a = 0; a < model.n; ++a)
            for (int c = 0; c < search.counts()[a][t]; ++c) alloc.owner[of_type[t][next++]] = a;
    }
    SolveResult r;
    r.verdict = Verdict::Feasible;
    r.allocation = std::move(alloc);
    r.algorithm = "ilp";
    r.nodes = search.nodes();
    for (int res = 0; res < model.m; ++res)
        if (int a = r.allocation.owner[res]; a != kUnassigned)
            r.welfare += model.table.types[model.table.type_of[res]][a];
    return r;
}

SolveResult solve_identical_enum(const Instance& inst, std::int64_t budget) {
    const StrippedInstance s = strip_zero_resources(inst);
    if (!is_identical(classify_preferences(s.inst).cls))
        throw GuardViolation("ident-enum: preferences are not identical");
    if (!strongly_connected(inst)) throw GuardViolation("ident-enum: graph not strongly connected");
    if (inst.n() > s.inst.m()) {
        if (s.inst.m() == 0) return feasible_result(inst, Allocation(std::vector<int>(inst.m(), 0)), "ident-enum");
        return infeasible_result("ident-enum");
    }
    SolveResult r = first_fair(s.inst, FairnessNotion::Weak,
                               detail::same_choices(s.inst.m(), iota_vec(inst.n())), budget,
                               "ident-enum");
    if (r.feasible()) r = feasible_result(inst, lift_allocation(s, r.allocation, inst.m(), 0), "ident-enum", r.nodes);
    return r;
}

PrunedInstance prune_large_sccs(const Instance& inst, int m_effective) {
    if (!is_identical(classify_preferences(inst).cls))
        throw GuardViolation("prune: preferences are not identical");
    std::vector<int> alive = iota_vec(inst.n());
    std::vector<int> removed;
    for (;;) {
        const Instance cur = induced_instance(inst, alive);
        const Digraph g = digraph_of(cur);
        const Condensation c = scc_condensation(g);
        std::vector<int> indeg(c.components.size(), 0);
        for (const auto& arc : c.comp_arcs) ++indeg[arc.second];
        int bad = -1;
        for (int k = 0; k < static_cast<int>(c.components.size()) && bad < 0; ++k)
            if (static_cast<int>(c.components[k].size()) > m_effective || indeg[k] > m_effective)
                bad = k;
        if (bad < 0) {
            std::sort(removed.begin(), removed.end());
            return {cur, alive, removed};
        }
        std::vector<char> drop(cur.n(), 0);
        for (int v : reachable_from(g, c.components[bad])) drop[v] = 1;
        std::vector<int> next;
        for (int v = 0; v < cur.n(); ++v)
            (drop[v] ? removed : next).push_back(alive[v]);
        alive = std::move(next);
    }
}

SolveResult solve_sgef_fpt_resources(const Instance& inst, std::int64_t budget) {
    const StrippedInstance s = strip_zero_resources(inst);
    const Instance& I = s.inst;
    const int n = I.n(), m = I.m();
    const char* name = "sgef-fpt";
    auto finish = [&](SolveResult r) {
        if (r.feasible())
            r = feasible_result(inst, lift_allocation(s, r.allocation, inst.m(), 0), name, r.nodes);
        r.algorithm = name;
        return r;
    };
    if (n == 0) {
        if (inst.m() == 0) return feasible_result(inst, Allocation(0), name);
        return infeasible_result(name);
    }
    const GraphClass gc = classify_graph(I);
    const Digraph g = digraph_of(I);
    std::vector<int> non_sinks;
    for (int v = 0; v < n; ++v)
        if (!g.out[v].empty()) non_sinks.push_back(v);
    const int ns = static_cast<int>(non_sinks.size());

    if (m >= n)
        return finish(first_fair(I, FairnessNotion::Strict, detail::same_choices(m, iota_vec(n)), budget, name));
    if (m < ns) return infeasible_result(name);
    if (m == ns)
        return finish(first_fair(I, FairnessNotion::Strict, detail::same_choices(m, non_sinks), budget, name));
    if (!gc.sources.empty()) {
        // A source absorbs surplus without creating envy. An isolated source is
        // also a sink, so it is added explicitly.
        std::vector<int> targets = non_sinks;
        if (std::find(targets.begin(), targets.end(), gc.sources.front()) == targets.end()) {
            targets.push_back(gc.sources.front());
            std::sort(targets.begin(), targets.end());
        }
        return finish(first_fair(I, FairnessNotion::Strict, detail::same_choices(m, targets), budget, name));
    }
    // No sources: inner agents plus at most m representatives of each sink type
    // (sinks sharing the same in-neighbour set).
    std::map<std::vector<int>, std::vector<int>> types;
    for (int t : gc.sinks) {
        std::vector<int> key = g.in[t];
        std::sort(key.begin(), key.end());
        types[key].push_back(t);
    }
    std::vector<int> targets = gc.inner;
    for (const auto& [key, sinks] : types)
        for (int k = 0; k < static_cast<int>(sinks.size()) && k < m; ++k) targets.push_back(sinks[k]);
    std::sort(targets.begin(), targets.end());
    return finish(first_fair(I, FairnessNotion::Strict, detail::same_choices(m, targets), budget, name));
}

}  // namespace gef
