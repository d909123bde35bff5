#pragma once

// Independent reference implementations used only by tests. They touch the
// library through Instance accessors and nothing else.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gef/model.hpp"

namespace oracle {

using gef::Instance;
using gef::Utility;

// owner[r] in [-1, n)
inline Utility value_of(const Instance& inst, int viewer, int holder, const std::vector<int>& owner) {
    Utility v = 0;
    for (int r = 0; r < inst.m(); ++r)
        if (owner[r] == holder) v += inst.u(viewer, r);
    return v;
}

inline bool fair(const Instance& inst, const std::vector<int>& owner, bool strict) {
    for (auto [a, b] : inst.arcs) {
        const Utility own = value_of(inst, a, a, owner), other = value_of(inst, a, b, owner);
        if (strict ? own <= other : own < other) return false;
    }
    return true;
}

inline Utility welfare(const Instance& inst, const std::vector<int>& owner) {
    Utility w = 0;
    for (int r = 0; r < inst.m(); ++r)
        if (owner[r] >= 0) w += inst.u(owner[r], r);
    return w;
}

inline std::vector<Utility> utilities(const Instance& inst, const std::vector<int>& owner) {
    std::vector<Utility> u(inst.n(), 0);
    for (int r = 0; r < inst.m(); ++r)
        if (owner[r] >= 0) u[owner[r]] += inst.u(owner[r], r);
    return u;
}

// Odometer over all owner vectors; the last resource changes fastest.
inline void for_each_allocation(int n, int m, bool partial,
                                const std::function<void(const std::vector<int>&)>& f) {
    const int base = n + (partial ? 1 : 0);
    if (base == 0) {
        if (m == 0) f({});
        return;
    }
    std::vector<int> digit(m, 0);
    std::vector<int> owner(m);
    for (;;) {
        for (int r = 0; r < m; ++r) owner[r] = digit[r] == n ? -1 : digit[r];
        f(owner);
        int pos = m - 1;
        while (pos >= 0 && ++digit[pos] == base) digit[pos--] = 0;
        if (pos < 0) return;
    }
}

inline bool complete_fair_exists(const Instance& inst, bool strict) {
    bool found = false;
    for_each_allocation(inst.n(), inst.m(), false, [&](const std::vector<int>& o) {
        if (!found && fair(inst, o, strict)) found = true;
    });
    return found;
}

inline std::optional<Utility> max_fair_welfare(const Instance& inst, bool strict) {
    std::optional<Utility> best;
    for_each_allocation(inst.n(), inst.m(), true, [&](const std::vector<int>& o) {
        if (fair(inst, o, strict)) {
            const Utility w = welfare(inst, o);
            if (!best || w > *best) best = w;
        }
    });
    return best;
}

inline bool dominates(const std::vector<Utility>& a, const std::vector<Utility>& b) {
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strictly = true;
    }
    return strictly;
}

// All utility vectors reachable by any (partial) allocation.
inline std::set<std::vector<Utility>> utility_vectors(const Instance& inst) {
    std::set<std::vector<Utility>> out;
    for_each_allocation(inst.n(), inst.m(), true,
                        [&](const std::vector<int>& o) { out.insert(utilities(inst, o)); });
    return out;
}

inline bool pareto(const std::set<std::vector<Utility>>& vectors, const std::vector<Utility>& u) {
    for (const auto& v : vectors)
        if (dominates(v, u)) return false;
    return true;
}

inline bool pareto_fair_exists(const Instance& inst, bool strict) {
    const auto vectors = utility_vectors(inst);
    bool found = false;
    for_each_allocation(inst.n(), inst.m(), true, [&](const std::vector<int>& o) {
        if (!found && fair(inst, o, strict) && pareto(vectors, utilities(inst, o))) found = true;
    });
    return found;
}

// Items into `bins` bins of exactly `cap` each (sizes sum to bins * cap).
inline bool bin_packing(const std::vector<Utility>& sizes, Utility cap, int bins) {
    std::vector<Utility> load(bins, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == sizes.size()) return std::all_of(load.begin(), load.end(), [&](Utility l) { return l == cap; });
        for (int b = 0; b < bins; ++b) {
            if (load[b] + sizes[i] > cap) continue;
            load[b] += sizes[i];
            if (place(i + 1)) return true;
            load[b] -= sizes[i];
        }
        return false;
    };
    return place(0);
}

// Subsets by bitmask, a different order from a recursive search.
inline bool has_clique(int n, const std::vector<std::pair<int, int>>& edges, int k) {
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (mask >> v & 1) ok = ((mask & ~(1u << v)) & ~adj[v]) == 0;
        if (ok) return true;
    }
    return false;
}

struct Colored {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> color;
};

// Tries every injective map.
inline bool colored_embedding_exists(const Colored& p, const Colored& h) {
    std::set<std::pair<int, int>> harcs(h.arcs.begin(), h.arcs.end());
    std::vector<int> image(p.n, -1);
    std::vector<char> used(h.n, 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == p.n) {
            for (auto [a, b] : p.arcs)
                if (!harcs.count({image[a], image[b]})) return false;
            return true;
        }
        for (int w = 0; w < h.n; ++w) {
            if (used[w] || h.color[w] != p.color[v]) continue;
            used[w] = 1;
            image[v] = w;
            if (go(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return go(0);
}

// Uncolored, non-induced subgraph isomorphism for undirected graphs.
inline bool undirected_subgraph(int pn, const std::vector<std::pair<int, int>>& pe, int hn,
                                const std::vector<std::pair<int, int>>& he) {
    if (pn > hn) return false;
    std::vector<std::vector<int>> padj(pn), hadj(hn);
    for (auto [a, b] : pe) padj[a].push_back(b), padj[b].push_back(a);
    std::vector<std::set<int>> hset(hn);
    for (auto [a, b] : he) {
        hadj[a].push_back(b), hadj[b].push_back(a);
        hset[a].insert(b), hset[b].insert(a);
    }
    // Breadth-first order per component, highest degree first.
    std::vector<int> order;
    std::vector<char> seen(pn, 0);
    std::vector<int> by_degree(pn);
    for (int i = 0; i < pn; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return padj[a].size() > padj[b].size(); });
    std::vector<int> parent(pn, -1);
    for (int root : by_degree) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (int w : padj[queue[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = queue[i];
                    queue.push_back(w);
                }
        }
    }
    std::vector<int> image(pn, -1);
    std::vector<char> used(hn, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == order.size()) return true;
        const int v = order[k];
        auto try_w = [&](int w) {
            if (used[w] || hadj[w].size() < padj[v].size()) return false;
            for (int x : padj[v])
                if (image[x] >= 0 && !hset[w].count(image[x])) return false;
            used[w] = 1;
            image[v] = w;
            if (go(k + 1)) return true;
            used[w] = 0;
            image[v] = -1;
            return false;
        };
        if (parent[v] >= 0) {
            for (int w : hadj[image[parent[v]]])
                if (try_w(w)) return true;
            return false;
        }
        for (int w = 0; w < hn; ++w)
            if (try_w(w)) return true;
        return false;
    };
    return go(0);
}

}  // namespace oracle
