#include "gef/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gef/graph.hpp"
#include "gef/poly.hpp"

namespace gef {

namespace {

bool acyclic_mask(int q, const std::vector<std::uint64_t>& succ) {
    std::uint64_t left = (q == 64) ? ~0ULL : ((1ULL << q) - 1);
    while (left) {
        bool progressed = false;
        for (int v = 0; v < q; ++v) {
            if (!(left >> v & 1)) continue;
            // v is removable when no remaining vertex points at it.
            bool has_pred = false;
            for (int u = 0; u < q && !has_pred; ++u)
                has_pred = (left >> u & 1) && (succ[u] >> v & 1);
            if (!has_pred) {
                left &= ~(1ULL << v);
                progressed = true;
            }
        }
        if (!progressed) return false;
    }
    return true;
}

// Canonical structure stream with optional pruning hooks. Skipping a
// structure never reorders the remaining ones.
class StructureStream {
public:
    using WeightOk = std::function<bool(const std::vector<int>& pack, int rho)>;
    using Visit = std::function<bool(const Structure&)>;

    StructureStream(int m, int max_packs, int max_weight_sum, WeightOk weight_ok, Visit visit)
        : m_(m), max_packs_(max_packs), max_weight_sum_(max_weight_sum),
          weight_ok_(std::move(weight_ok)), visit_(std::move(visit)), rgs_(m, 0) {}

    // False when a pack count too large to enumerate arc sets was reached.
    bool run() {
        if (m_ == 0) return true;
        partitions(1, 0);
        return !overflow_;
    }

private:
    void partitions(int i, int top) {
        if (halted_) return;
        if (i == m_) {
            const int q = top + 1;
            if (q > max_packs_) return;
            s_.packs.assign(q, {});
            for (int r = 0; r < m_; ++r) s_.packs[rgs_[r]].push_back(r);
            s_.weight.assign(q, 0);
            weights(0, 0);
            return;
        }
        for (int label = 0; label <= top + 1 && !halted_; ++label) {
            rgs_[i] = label;
            partitions(i + 1, std::max(top, label));
        }
        rgs_[i] = 0;
    }

    void weights(int p, int sum) {
        if (halted_) return;
        const int q = static_cast<int>(s_.packs.size());
        if (p == q) {
            arc_sets();
            return;
        }
        for (int rho = 1; rho <= m_ && !halted_; ++rho) {
            if (sum + rho > max_weight_sum_) break;
            if (weight_ok_ && !weight_ok_(s_.packs[p], rho)) continue;
            s_.weight[p] = rho;
            weights(p + 1, sum + rho);
        }
    }

    void arc_sets() {
        const int q = static_cast<int>(s_.packs.size());
        std::vector<Arc> pairs;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                if (i != j) pairs.emplace_back(i, j);
        if (pairs.size() > 62) {
            overflow_ = halted_ = true;
            return;
        }
        const std::uint64_t limit = 1ULL << pairs.size();
        std::vector<std::uint64_t> succ(q);
        for (std::uint64_t mask = 0; mask < limit && !halted_; ++mask) {
            std::fill(succ.begin(), succ.end(), 0);
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1) succ[pairs[b].first] |= 1ULL << pairs[b].second;
            if (!acyclic_mask(q, succ)) continue;
            s_.arcs.clear();
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1) s_.arcs.push_back(pairs[b]);
            if (!visit_(s_)) halted_ = true;
        }
    }

    int m_, max_packs_, max_weight_sum_;
    WeightOk weight_ok_;
    Visit visit_;
    std::vector<int> rgs_;
    Structure s_;
    bool halted_ = false;
    bool overflow_ = false;
};

void require_identical_stripped(const Instance& inst, const char* who) {
    if (!is_identical(classify_preferences(inst).cls))
        throw GuardViolation(std::string(who) + ": preferences are not identical");
    for (int r = 0; r < inst.m(); ++r) {
        bool zero = true;
        for (const auto& row : inst.rows) zero = zero && row[r] == 0;
        if (zero && inst.n() > 0) throw GuardViolation(std::string(who) + ": zero resource present");
    }
}

Utility pack_value(const Instance& inst, const std::vector<int>& pack) {
    Utility v = 0;
    if (inst.rows.empty()) return 0;
    for (int r : pack) v += inst.rows[0][r];
    return v;
}

// Split of `pack` into `rho` equal-value bundles, as bundle indices per pack
// resource, or nullopt.
std::optional<std::vector<int>> equal_split(const Instance& inst, const std::vector<int>& pack,
                                            int rho) {
    if (rho > static_cast<int>(pack.size()) || pack_value(inst, pack) % rho != 0) return std::nullopt;
    std::vector<Utility> row;
    for (int r : pack) row.push_back(inst.rows.empty() ? 0 : inst.rows[0][r]);
    std::vector<Arc> clique;
    for (int a = 0; a < rho; ++a)
        for (int b = 0; b < rho; ++b)
            if (a != b) clique.emplace_back(a, b);
    const Instance sub = make_instance(std::vector<std::vector<Utility>>(rho, row), clique);
    const SolveResult r = solve_identical_enum(sub);
    if (!r.feasible()) return std::nullopt;
    return r.allocation.owner;
}

bool arcs_envy_free(const Instance& inst, const Structure& s) {
    for (const auto& [p, t] : s.arcs) {
        // value(p)/rho(p) >= value(t)/rho(t)
        if (pack_value(inst, s.packs[p]) * s.weight[t] < pack_value(inst, s.packs[t]) * s.weight[p])
            return false;
    }
    return true;
}

ColoredDigraph pattern_of(const Structure& s, int m) {
    ColoredDigraph g;
    g.n = static_cast<int>(s.packs.size());
    g.arcs = s.arcs;
    std::vector<int> indeg(g.n, 0);
    for (const auto& arc : s.arcs) ++indeg[arc.second];
    for (int p = 0; p < g.n; ++p) g.color.push_back(s.weight[p] * (m + 1) + indeg[p]);
    return g;
}

}  // namespace

void enumerate_structures(const Instance& inst, const std::function<bool(const Structure&)>& visit) {
    require_identical_stripped(inst, "structures");
    const int m = inst.m();
    StructureStream stream(m, m, m * m, nullptr, visit);
    if (!stream.run()) throw GuardViolation("structures: too many packs to enumerate arc sets");
}

bool check_structure_sanity(const Instance& inst, const Structure& s) {
    for (std::size_t p = 0; p < s.packs.size(); ++p)
        if (!equal_split(inst, s.packs[p], s.weight[p])) return false;
    return arcs_envy_free(inst, s);
}

std::optional<std::vector<int>> directed_colored_subiso(const ColoredDigraph& pattern,
                                                        const ColoredDigraph& host) {
    const int np = pattern.n, nh = host.n;
    if (np == 0) return std::vector<int>{};
    if (np > nh) return std::nullopt;
    const Digraph p(np, pattern.arcs), h(nh, host.arcs);
    std::vector<std::vector<int>> hout = h.out;
    for (auto& l : hout) std::sort(l.begin(), l.end());
    auto host_arc = [&](int a, int b) {
        return std::binary_search(hout[a].begin(), hout[a].end(), b);
    };

    // Connectivity-first order of pattern vertices.
    std::vector<int> order;
    std::vector<char> placed(np, 0);
    std::vector<int> links(np, 0);
    auto degree = [&](int v) { return p.out[v].size() + p.in[v].size(); };
    for (int step = 0; step < np; ++step) {
        int best = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v]) continue;
            if (best < 0 || links[v] > links[best] ||
                (links[v] == links[best] && degree(v) > degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (int w : p.out[best]) ++links[w];
        for (int w : p.in[best]) ++links[w];
    }

    std::vector<int> image(np, -1);
    std::vector<char> used(nh, 0);
    std::function<bool(int)> extend = [&](int k) {
        if (k == np) return true;
        const int v = order[k];
        for (int w = 0; w < nh; ++w) {
            if (used[w] || host.color[w] != pattern.color[v]) continue;
            if (h.out[w].size() < p.out[v].size() || h.in[w].size() < p.in[v].size()) continue;
            bool ok = true;
            for (int x : p.out[v])
                if (image[x] >= 0 && !host_arc(w, image[x])) ok = false;
            for (int x : p.in[v])
                if (ok && image[x] >= 0 && !host_arc(image[x], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (extend(k + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (extend(0)) return image;
    return std::nullopt;
}

namespace {

UndirectedGraph gadgetize(const ColoredDigraph& g, int q) {
    const int c_beg = q + 1, c_end = q + 2;
    constexpr int kVoid = 0;
    // Stage (i): subdivide arcs.
    std::vector<int> color = g.color;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.arcs) {
        const int ub = static_cast<int>(color.size());
        color.push_back(c_beg);
        const int ve = static_cast<int>(color.size());
        color.push_back(c_end);
        edges.emplace_back(u, ub);
        edges.emplace_back(ub, ve);
        edges.emplace_back(ve, v);
    }
    // Stage (ii): every edge becomes a 2-path through a void dummy.
    UndirectedGraph out;
    std::vector<std::pair<int, int>> doubled;
    for (const auto& [a, b] : edges) {
        const int d = static_cast<int>(color.size());
        color.push_back(kVoid);
        doubled.emplace_back(a, d);
        doubled.emplace_back(d, b);
    }
    out.edges = std::move(doubled);
    // Stage (iii): a bulb on every non-void vertex.
    const int base = static_cast<int>(color.size());
    int next = base;
    for (int v = 0; v < base; ++v) {
        if (color[v] == kVoid) continue;
        const int foot = next++;
        out.edges.emplace_back(v, foot);
        auto cycle = [&](int length) {
            int prev = foot;
            for (int k = 1; k < length; ++k) {
                const int x = next++;
                out.edges.emplace_back(prev, x);
                prev = x;
            }
            out.edges.emplace_back(prev, foot);
        };
        cycle(3);
        cycle(3 + color[v]);
    }
    out.n = next;
    return out;
}

}  // namespace

std::pair<UndirectedGraph, UndirectedGraph> gadget_reduce(const ColoredDigraph& pattern,
                                                          const ColoredDigraph& host) {
    int q = 0;
    for (int c : pattern.color) q = std::max(q, c);
    for (int c : host.color) q = std::max(q, c);
    return {gadgetize(pattern, q), gadgetize(host, q)};
}

SolveResult solve_gef_identical_structures(const Instance& inst, std::int64_t budget) {
    const char* name = "struct-fpt";
    const StrippedInstance stripped = strip_zero_resources(inst);
    const Instance& I = stripped.inst;
    if (!is_identical(classify_preferences(I).cls))
        throw GuardViolation("struct-fpt: preferences are not identical");
    if (inst.n() == 0) {
        if (inst.m() == 0) return feasible_result(inst, Allocation(0), name);
        return infeasible_result(name);
    }
    const int m = I.m();
    if (m == 0) return feasible_result(inst, Allocation(std::vector<int>(inst.m(), 0)), name);

    const PrunedInstance pruned = prune_large_sccs(I, m);
    if (pruned.inst.n() == 0) return infeasible_result(name);
    const Condensation cond = scc_condensation(pruned.inst);
    const int comps = static_cast<int>(cond.components.size());
    ColoredDigraph host;
    host.n = comps;
    host.arcs = cond.comp_arcs;
    std::vector<int> indeg(comps, 0);
    for (const auto& arc : cond.comp_arcs) ++indeg[arc.second];
    for (int c = 0; c < comps; ++c)
        host.color.push_back(static_cast<int>(cond.components[c].size()) * (m + 1) + indeg[c]);

    std::map<std::pair<std::vector<int>, int>, std::optional<std::vector<int>>> splits;
    auto split_of = [&](const std::vector<int>& pack, int rho) -> const std::optional<std::vector<int>>& {
        auto key = std::make_pair(pack, rho);
        auto it = splits.find(key);
        if (it == splits.end()) it = splits.emplace(key, equal_split(I, pack, rho)).first;
        return it->second;
    };

    std::int64_t nodes = 0;
    bool over = false;
    std::optional<Allocation> found;
    StructureStream stream(
        m, comps, pruned.inst.n(),
        [&](const std::vector<int>& pack, int rho) { return split_of(pack, rho).has_value(); },
        [&](const Structure& s) {
            if (++nodes > budget) {
                over = true;
                return false;
            }
            if (!arcs_envy_free(I, s)) return true;
            const auto image = directed_colored_subiso(pattern_of(s, m), host);
            if (!image) return true;
            Allocation a(m);
            for (std::size_t p = 0; p < s.packs.size(); ++p) {
                const auto& members = cond.components[(*image)[p]];
                const auto& split = *split_of(s.packs[p], s.weight[p]);
                for (std::size_t i = 0; i < s.packs[p].size(); ++i)
                    a.owner[s.packs[p][i]] = pruned.kept[members[split[i]]];
            }
            found = std::move(a);
            return false;
        });
    const bool complete_run = stream.run();
    if (over || !complete_run) {
        SolveResult r;
        r.verdict = Verdict::BudgetExceeded;
        r.algorithm = name;
        r.nodes = nodes;
        return r;
    }
    if (!found) return infeasible_result(name, nodes);
    return feasible_result(inst, lift_allocation(stripped, *found, inst.m(), 0), name, nodes);
}

}  // namespace gef
