#include "gef/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gef {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& s : names)
        if (!seen.insert(s).second)
            throw InvalidInstance(std::string("duplicate ") + what + " name '" + s + "'");
}

}  // namespace

Instance make_instance(std::vector<std::string> agents, std::vector<std::string> resources,
                       std::vector<std::vector<Utility>> rows, std::vector<int> row_of,
                       std::vector<Arc> arcs) {
    check_unique(agents, "agent");
    check_unique(resources, "resource");
    const int n = static_cast<int>(agents.size());
    const int m = static_cast<int>(resources.size());
    if (static_cast<int>(row_of.size()) != n)
        throw InvalidInstance("utility matrix has " + std::to_string(row_of.size()) +
                              " rows, expected " + std::to_string(n));
    Utility max_u = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != m)
            throw InvalidInstance("utility row has " + std::to_string(r.size()) +
                                  " entries, expected " + std::to_string(m));
        for (Utility v : r) {
            if (v < 0) throw InvalidInstance("negative utility " + std::to_string(v));
            max_u = std::max(max_u, v);
        }
    }
    for (int r : row_of)
        if (r < 0 || r >= static_cast<int>(rows.size()))
            throw InvalidInstance("row index out of range");
    const __int128 bound = static_cast<__int128>(n) * max_u * m;
    if (bound >= (static_cast<__int128>(1) << 62))
        throw InvalidInstance("utilities too large: n * m * max-utility must stay below 2^62");
    for (const auto& [a, b] : arcs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInstance("arc references unknown agent");
        if (a == b) throw InvalidInstance("self-loop arc on agent '" + agents[a] + "'");
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
        auto it = std::adjacent_find(arcs.begin(), arcs.end());
        throw InvalidInstance("duplicate arc ('" + agents[it->first] + "', '" +
                              agents[it->second] + "')");
    }

    // Canonical rows: distinct, numbered by first use.
    Instance inst;
    inst.agents = std::move(agents);
    inst.resources = std::move(resources);
    inst.arcs = std::move(arcs);
    inst.row_of.resize(n);
    std::map<std::vector<Utility>, int> index;
    std::vector<int> remap(rows.size(), -1);
    for (int i = 0; i < n; ++i) {
        int& slot = remap[row_of[i]];
        if (slot < 0) {
            auto [it, fresh] = index.emplace(rows[row_of[i]], static_cast<int>(inst.rows.size()));
            if (fresh) inst.rows.push_back(rows[row_of[i]]);
            slot = it->second;
        }
        inst.row_of[i] = slot;
    }
    return inst;
}

Instance make_instance(std::vector<std::string> agents, std::vector<std::string> resources,
                       const std::vector<std::vector<Utility>>& utilities, std::vector<Arc> arcs) {
    std::vector<int> row_of(utilities.size());
    for (std::size_t i = 0; i < row_of.size(); ++i) row_of[i] = static_cast<int>(i);
    return make_instance(std::move(agents), std::move(resources), utilities, std::move(row_of),
                         std::move(arcs));
}

Instance make_instance(const std::vector<std::vector<Utility>>& utilities, std::vector<Arc> arcs) {
    const int n = static_cast<int>(utilities.size());
    const int m = n == 0 ? 0 : static_cast<int>(utilities[0].size());
    std::vector<std::string> agents, resources;
    for (int i = 0; i < n; ++i) agents.push_back("a" + std::to_string(i));
    for (int j = 0; j < m; ++j) resources.push_back("r" + std::to_string(j));
    return make_instance(std::move(agents), std::move(resources), utilities, std::move(arcs));
}

std::vector<std::vector<Utility>> dense_utilities(const Instance& inst) {
    std::vector<std::vector<Utility>> out;
    out.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) out.push_back(inst.row(i));
    return out;
}

const char* to_string(FairnessNotion v) { return v == FairnessNotion::Weak ? "weak" : "strict"; }

const char* to_string(EfficiencyGoal v) {
    switch (v) {
        case EfficiencyGoal::Complete: return "complete";
        case EfficiencyGoal::Pareto: return "pareto";
        case EfficiencyGoal::MaxWelfare: return "welfare";
    }
    return "?";
}

const char* to_string(PreferenceClass v) {
    switch (v) {
        case PreferenceClass::IdenticalZeroOne: return "identical-01";
        case PreferenceClass::Identical: return "identical";
        case PreferenceClass::ZeroOne: return "01";
        case PreferenceClass::General: return "general";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::BudgetExceeded: return "budget";
    }
    return "?";
}

std::vector<std::vector<int>> bundles(const Instance& inst, const Allocation& alloc) {
    std::vector<std::vector<int>> out(inst.n());
    for (int r = 0; r < static_cast<int>(alloc.owner.size()); ++r)
        if (alloc.owner[r] != kUnassigned) out[alloc.owner[r]].push_back(r);
    return out;
}

Utility bundle_utility(const Instance& inst, int agent, const std::vector<int>& bundle) {
    const auto& row = inst.row(agent);
    Utility s = 0;
    for (int r : bundle) s += row[r];
    return s;
}

std::vector<Utility> agent_utilities(const Instance& inst, const Allocation& alloc) {
    std::vector<Utility> out(inst.n(), 0);
    for (int r = 0; r < static_cast<int>(alloc.owner.size()); ++r)
        if (int a = alloc.owner[r]; a != kUnassigned) out[a] += inst.u(a, r);
    return out;
}

std::optional<Arc> verify_fairness(const Instance& inst, const Allocation& alloc,
                                   FairnessNotion notion) {
    const auto b = bundles(inst, alloc);
    const auto own = agent_utilities(inst, alloc);
    for (const auto& arc : inst.arcs) {
        const Utility other = bundle_utility(inst, arc.first, b[arc.second]);
        const bool ok = notion == FairnessNotion::Weak ? own[arc.first] >= other
                                                       : own[arc.first] > other;
        if (!ok) return arc;
    }
    return std::nullopt;
}

bool is_complete(const Instance& inst, const Allocation& alloc) {
    if (static_cast<int>(alloc.owner.size()) != inst.m()) return false;
    return std::none_of(alloc.owner.begin(), alloc.owner.end(),
                        [](int a) { return a == kUnassigned; });
}

Utility utilitarian_welfare(const Instance& inst, const Allocation& alloc) {
    Utility s = 0;
    for (int r = 0; r < static_cast<int>(alloc.owner.size()); ++r)
        if (int a = alloc.owner[r]; a != kUnassigned) s += inst.u(a, r);
    return s;
}

bool dominates(const Instance& inst, const Allocation& a, const Allocation& b) {
    const auto ua = agent_utilities(inst, a);
    const auto ub = agent_utilities(inst, b);
    bool strict = false;
    for (int i = 0; i < inst.n(); ++i) {
        if (ua[i] < ub[i]) return false;
        if (ua[i] > ub[i]) strict = true;
    }
    return strict;
}

StrippedInstance strip_zero_resources(const Instance& inst) {
    StrippedInstance s;
    for (int r = 0; r < inst.m(); ++r) {
        bool positive = false;
        for (const auto& row : inst.rows)
            if (row[r] > 0) { positive = true; break; }
        if (positive) s.kept.push_back(r);
    }
    std::vector<std::string> res;
    std::vector<std::vector<Utility>> rows;
    for (int r : s.kept) res.push_back(inst.resources[r]);
    for (const auto& row : inst.rows) {
        std::vector<Utility> nr;
        nr.reserve(s.kept.size());
        for (int r : s.kept) nr.push_back(row[r]);
        rows.push_back(std::move(nr));
    }
    s.inst = make_instance(inst.agents, std::move(res), std::move(rows), inst.row_of, inst.arcs);
    return s;
}

Allocation lift_allocation(const StrippedInstance& s, const Allocation& small, int m_original,
                           int zero_owner) {
    Allocation out(m_original);
    std::vector<char> kept(m_original, 0);
    for (int j = 0; j < static_cast<int>(s.kept.size()); ++j) {
        out.owner[s.kept[j]] = small.owner[j];
        kept[s.kept[j]] = 1;
    }
    for (int r = 0; r < m_original; ++r)
        if (!kept[r]) out.owner[r] = zero_owner;
    return out;
}

PreferenceProfile classify_preferences(const Instance& inst) {
    std::set<Utility> values;
    bool zero_one = true;
    for (const auto& row : inst.rows)
        for (Utility v : row) {
            values.insert(v);
            if (v > 1) zero_one = false;
        }
    // Rows are deduplicated at construction, so identical means a single row.
    const bool identical = inst.rows.size() <= 1;
    PreferenceClass c = identical ? (zero_one ? PreferenceClass::IdenticalZeroOne
                                              : PreferenceClass::Identical)
                                  : (zero_one ? PreferenceClass::ZeroOne : PreferenceClass::General);
    return {c, static_cast<int>(values.size())};
}

bool is_identical(PreferenceClass c) {
    return c == PreferenceClass::IdenticalZeroOne || c == PreferenceClass::Identical;
}

bool is_zero_one(PreferenceClass c) {
    return c == PreferenceClass::IdenticalZeroOne || c == PreferenceClass::ZeroOne;
}

Instance induced_instance(const Instance& inst, const std::vector<int>& agents) {
    std::vector<int> pos(inst.n(), -1);
    std::vector<std::string> names;
    std::vector<int> row_of;
    for (int k = 0; k < static_cast<int>(agents.size()); ++k) {
        pos[agents[k]] = k;
        names.push_back(inst.agents[agents[k]]);
        row_of.push_back(inst.row_of[agents[k]]);
    }
    std::vector<Arc> arcs;
    for (const auto& [a, b] : inst.arcs)
        if (pos[a] >= 0 && pos[b] >= 0) arcs.emplace_back(pos[a], pos[b]);
    return make_instance(std::move(names), inst.resources, inst.rows, std::move(row_of),
                         std::move(arcs));
}

}  // namespace gef
