#include "gef/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gef {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void validate_graph(const CliqueInput& in) {
    if (in.vertices < 1) throw InvalidInstance("clique input: no vertices");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : in.edges) {
        if (u < 0 || v < 0 || u >= in.vertices || v >= in.vertices)
            throw InvalidInstance("clique input: edge endpoint out of range");
        if (u == v) throw InvalidInstance("clique input: self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw InvalidInstance("clique input: duplicate edge");
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw InvalidInstance(what);
}

std::vector<std::string> names(const std::string& prefix, long long count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (long long i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

void append(std::vector<std::string>& to, std::vector<std::string> from) {
    to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

int root_cycle_x(const CliqueInput& in, CliqueVariant v) {
    if (v == CliqueVariant::RootCycleOutDegree)
        return std::max<int>(in.vertices * static_cast<int>(in.edges.size()), in.k * in.k);
    return in.k * in.k;
}

// Edges of `in` with both endpoints in `clique`, in input order.
std::vector<int> clique_edges(const CliqueInput& in, const std::vector<int>& clique) {
    std::vector<char> member(in.vertices, 0);
    for (int v : clique) member[v] = 1;
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(in.edges.size()); ++e)
        if (member[in.edges[e].first] && member[in.edges[e].second]) out.push_back(e);
    return out;
}

Generated root_cycle(const CliqueInput& in, CliqueVariant variant) {
    require(in.k > 1 && in.k <= in.vertices, "thm44: needs 1 < k <= vertices");
    const long long x = root_cycle_x(in, variant);
    const long long root = ipow(x, 4);
    const int n = in.vertices, m = static_cast<int>(in.edges.size());
    require(root + n * x + m < (1LL << 31), "thm44: instance too large");
    const int R = static_cast<int>(root);
    auto vertex_agent = [&](int v, long long j) { return static_cast<int>(root + v * x + j); };
    auto edge_agent = [&](int e) { return static_cast<int>(root + n * x + e); };

    std::vector<std::string> agents = names("root", root);
    for (int v = 0; v < n; ++v) append(agents, names("v" + std::to_string(v) + "_", x));
    append(agents, names("e", m));
    std::vector<Arc> arcs;
    auto cycle = [&](int first, long long len) {
        if (len < 2) return;
        for (long long j = 0; j < len; ++j)
            arcs.emplace_back(first + static_cast<int>(j), first + static_cast<int>((j + 1) % len));
    };
    cycle(0, root);
    for (int v = 0; v < n; ++v) {
        cycle(vertex_agent(v, 0), x);
        arcs.emplace_back(static_cast<int>(v % R), vertex_agent(v, 0));
    }
    std::vector<int> used(n, 0);
    for (int e = 0; e < m; ++e)
        for (int end : {in.edges[e].first, in.edges[e].second})
            arcs.emplace_back(vertex_agent(end, used[end]++ % x), edge_agent(e));

    const long long resources = root + in.k * x + choose2(in.k);
    Generated g;
    g.instance = make_instance(std::move(agents), names("r", resources),
                               {std::vector<Utility>(resources, 1)},
                               std::vector<int>(root + n * x + m, 0), std::move(arcs));
    return g;
}

Generated separator_cycles(const CliqueInput& in) {
    const int n = in.vertices, m = static_cast<int>(in.edges.size()), k = in.k;
    require(2 < k && k < n, "thm48: needs 2 < k < vertices");
    require(m > choose2(k), "thm48: needs more than C(k,2) edges");
    const long long gsize = ipow(k, 10), cons = ipow(k, 3);
    require(m <= cons, "thm48: needs at most k^3 edges for distinct constraint targets");
    const long long total = (n + m) * (gsize + 1) + cons;
    require(total < (1LL << 31), "thm48: instance too large");
    // Agents: vertices, edges, dummy groups (vertices then edges), constraint agents.
    auto dummy = [&](int group, long long j) { return static_cast<int>(n + m + group * gsize + j); };
    const int c0 = static_cast<int>(n + m + (n + m) * gsize);

    std::vector<std::string> agents = names("v", n);
    append(agents, names("e", m));
    for (int grp = 0; grp < n + m; ++grp)
        append(agents, names("d" + std::to_string(grp) + "_", gsize));
    append(agents, names("c", cons));

    std::vector<Arc> arcs;
    for (int grp = 0; grp < n + m; ++grp)
        for (long long j = 0; j < gsize; ++j) arcs.emplace_back(dummy(grp, j), dummy(grp, (j + 1) % gsize));
    auto chain = [&](int first, int count, int group0) {
        for (int i = 0; i < count; ++i) {
            arcs.emplace_back(first + i, dummy(group0 + i, 0));
            arcs.emplace_back(dummy(group0 + i, 1), first + (i + 1) % count);
        }
    };
    chain(0, n, 0);
    chain(n, m, n);
    for (int e = 0; e < m; ++e) {
        arcs.emplace_back(in.edges[e].first, n + e);
        arcs.emplace_back(in.edges[e].second, n + e);
        arcs.emplace_back(n + e, c0 + e);
    }
    for (long long j = 0; j < cons; ++j) arcs.emplace_back(c0 + j, c0 + (j + 1) % cons);
    arcs.emplace_back(m < cons ? c0 + m : c0, 0);

    // Resources: vertex, edge, distinguished constraint, other constraint.
    const long long ce = choose2(k), cr = ipow(k, 4);
    std::vector<std::string> resources = names("rv", k);
    append(resources, names("re", ce));
    append(resources, names("rc", cr));
    const long long mr = k + ce + cr;
    std::vector<std::vector<Utility>> rows(3, std::vector<Utility>(mr, 0));
    for (long long r = 0; r < mr; ++r) {
        const bool vres = r < k, eres = r >= k && r < k + ce;
        const bool dist = r >= k + ce && r < k + ce + k, cres = r >= k + ce;
        rows[0][r] = (vres || eres) ? 1 : 0;  // vertex agents
        rows[1][r] = (eres || dist) ? 1 : 0;  // edge agents
        rows[2][r] = cres ? 1 : 0;            // constraint and dummy agents
    }
    std::vector<int> row_of(total, 2);
    for (int v = 0; v < n; ++v) row_of[v] = 0;
    for (int e = 0; e < m; ++e) row_of[n + e] = 1;
    Generated g;
    g.instance = make_instance(std::move(agents), std::move(resources), std::move(rows),
                               std::move(row_of), std::move(arcs));
    return g;
}

Generated separating_path(const CliqueInput& in, bool scc) {
    const int n = in.vertices, m = static_cast<int>(in.edges.size()), k = in.k;
    require(1 < k && k < n, "prop56: needs 1 < k < vertices");
    require(m > choose2(k), "prop56: needs more than C(k,2) edges");
    // Agents: vertices, edges, separating v*_i, s, t.
    const int star0 = n + m, s = 2 * n + m, t = s + 1;
    std::vector<std::string> agents = names("v", n);
    append(agents, names("e", m));
    append(agents, names("vs", n));
    agents.push_back("s");
    agents.push_back("t");
    std::vector<Arc> arcs;
    for (int e = 0; e < m; ++e) {
        arcs.emplace_back(in.edges[e].first, n + e);
        arcs.emplace_back(in.edges[e].second, n + e);
        arcs.emplace_back(n + e, t);
    }
    for (int i = 0; i < n; ++i) arcs.emplace_back(star0 + i, i);
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, star0 + i + 1);
    arcs.emplace_back(s, star0);
    if (scc) arcs.emplace_back(t, s);

    // Resources: distinguished edge, plain edge, vertex, separating, special (+ closing).
    const int ce = static_cast<int>(choose2(k));
    std::vector<std::string> resources = names("rd", ce);
    append(resources, names("re", m - ce));
    append(resources, names("rv", n + k));
    append(resources, names("rs", n));
    resources.push_back("rtop");
    if (scc) resources.push_back("rbot");
    const int mr = static_cast<int>(resources.size());
    // Rows: s, vertex, edge, t, separating.
    std::vector<std::vector<Utility>> rows(5, std::vector<Utility>(mr, 0));
    for (int r = 0; r < mr; ++r) {
        if (r < ce) rows[1][r] = rows[2][r] = 1;
        else if (r < m) rows[2][r] = 1;
        else if (r < m + n + k) rows[1][r] = 1;
        else if (r < m + n + k + n) rows[4][r] = 1;
        else if (r == m + 2 * n + k) rows[0][r] = 1;
        else rows[3][r] = 1;
    }
    std::vector<int> row_of(t + 1, 4);
    for (int v = 0; v < n; ++v) row_of[v] = 1;
    for (int e = 0; e < m; ++e) row_of[n + e] = 2;
    row_of[s] = 0;
    row_of[t] = 3;
    Generated g;
    g.notion = FairnessNotion::Strict;
    g.instance = make_instance(std::move(agents), std::move(resources), std::move(rows),
                               std::move(row_of), std::move(arcs));
    return g;
}

Generated welfare_threshold(const CliqueInput& in) {
    const int n = in.vertices, m = static_cast<int>(in.edges.size()), k = in.k;
    require(1 < k && k < n, "prop63: needs 1 < k < vertices");
    const int ce = static_cast<int>(choose2(k));
    std::vector<std::string> agents{"astar"};
    append(agents, names("v", n));
    append(agents, names("e", m));
    std::vector<Arc> arcs;
    for (int a = 1; a <= n + m; ++a) arcs.emplace_back(0, a);
    for (int e = 0; e < m; ++e) {
        arcs.emplace_back(1 + in.edges[e].first, 1 + n + e);
        arcs.emplace_back(1 + in.edges[e].second, 1 + n + e);
    }
    std::vector<std::string> resources{"rstar"};
    append(resources, names("rv", k));
    append(resources, names("re", ce));
    const int mr = 1 + k + ce;
    std::vector<std::vector<Utility>> rows(3, std::vector<Utility>(mr, 0));
    for (int r = 0; r < mr; ++r) {
        rows[0][r] = 1;
        if (r >= 1 && r <= k) rows[1][r] = 2;
        if (r > k) rows[1][r] = 1, rows[2][r] = 2;
    }
    std::vector<int> row_of(1 + n + m, 2);
    row_of[0] = 0;
    for (int v = 1; v <= n; ++v) row_of[v] = 1;
    Generated g;
    g.goal = EfficiencyGoal::MaxWelfare;
    g.threshold = 1 + 2 * k + 2 * ce;
    g.instance = make_instance(std::move(agents), std::move(resources), std::move(rows),
                               std::move(row_of), std::move(arcs));
    return g;
}

void validate_packing(const BinPackingInput& in) {
    require(in.bins >= 1 && in.bin_size >= 1, "bin packing: needs positive bin size and count");
    Utility total = 0;
    for (Utility s : in.sizes) {
        require(s >= 1, "bin packing: item sizes must be positive");
        total += s;
    }
    require(total == in.bins * in.bin_size, "bin packing: item sizes must sum to bins * bin size");
}

Generated bin_chain(const BinPackingInput& in, bool cycle) {
    const int n = static_cast<int>(in.sizes.size()), k = in.bins;
    const Utility share = in.bin_size;  // S / k
    std::vector<std::string> agents = names("a", k + 2);
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < k + 2; ++i) arcs.emplace_back(i, i + 1);
    if (cycle) arcs.emplace_back(k + 1, 0);
    std::vector<std::string> resources = names("item", n);
    append(resources, names("unit", k));
    resources.push_back("rstar");
    if (cycle) resources.push_back("rclose");
    const int mr = static_cast<int>(resources.size());
    std::vector<std::vector<Utility>> u(k + 2, std::vector<Utility>(mr, 0));
    for (int a = 0; a < k; ++a) {
        for (int i = 0; i < n; ++i) u[a][i] = in.sizes[i];
        u[a][n + a] = 1;
    }
    u[k - 1][n + k] = share;
    u[k][n + k] = 1;
    if (cycle) u[k + 1][n + k + 1] = 1;
    Generated g;
    g.notion = FairnessNotion::Strict;
    g.instance = make_instance(std::move(agents), std::move(resources), u, std::move(arcs));
    return g;
}

Generated dummy_ladder(const BinPackingInput& in) {
    const int n = static_cast<int>(in.sizes.size()), k = in.bins;
    const int B = static_cast<int>(in.bin_size);
    // Agents: bins, dummies a'_1..a'_B, specials.
    std::vector<std::string> agents = names("bin", k);
    append(agents, names("dummy", B));
    append(agents, names("special", k));
    auto dummy = [&](int i) { return k + i - 1; };  // a'_i, 1-based
    std::vector<Arc> arcs;
    for (int i = B; i >= 2; --i) arcs.emplace_back(dummy(i), dummy(i - 1));
    for (int a = 0; a < k; ++a) {
        arcs.emplace_back(a, dummy(B));
        arcs.emplace_back(k + B + a, a);
    }
    std::vector<std::string> resources = names("step", B);
    append(resources, names("item", n));
    append(resources, names("special", k));
    std::vector<Utility> row;
    for (int i = 1; i <= B; ++i) row.push_back(i - 1);
    for (Utility s : in.sizes) row.push_back(s);
    for (int j = 0; j < k; ++j) row.push_back(B + 1);
    Generated g;
    g.notion = FairnessNotion::Strict;
    g.instance = make_instance(std::move(agents), std::move(resources), {row},
                               std::vector<int>(2 * k + B, 0), std::move(arcs));
    return g;
}

}  // namespace

Generated gen_from_clique(const CliqueInput& input, CliqueVariant variant) {
    validate_graph(input);
    switch (variant) {
        case CliqueVariant::RootCycleOutDegree:
        case CliqueVariant::RootCycleFewResources: return root_cycle(input, variant);
        case CliqueVariant::SeparatorCycles: return separator_cycles(input);
        case CliqueVariant::SeparatingPathDag: return separating_path(input, false);
        case CliqueVariant::SeparatingPathScc: return separating_path(input, true);
        case CliqueVariant::WelfareThreshold: return welfare_threshold(input);
    }
    throw InvalidInstance("unknown clique variant");
}

Generated gen_from_binpacking(const BinPackingInput& input, BinPackingVariant variant) {
    validate_packing(input);
    switch (variant) {
        case BinPackingVariant::BinChainPath: return bin_chain(input, false);
        case BinPackingVariant::BinChainCycle: return bin_chain(input, true);
        case BinPackingVariant::DummyLadder: return dummy_ladder(input);
    }
    throw InvalidInstance("unknown bin packing variant");
}

Allocation planted_allocation(const CliqueInput& in, CliqueVariant variant,
                              const std::vector<int>& clique) {
    const int n = in.vertices, m = static_cast<int>(in.edges.size()), k = in.k;
    const std::vector<int> cedges = clique_edges(in, clique);
    std::vector<int> owner;
    switch (variant) {
        case CliqueVariant::RootCycleOutDegree:
        case CliqueVariant::RootCycleFewResources: {
            const long long x = root_cycle_x(in, variant), root = ipow(x, 4);
            for (long long j = 0; j < root; ++j) owner.push_back(static_cast<int>(j));
            for (int v : clique)
                for (long long j = 0; j < x; ++j) owner.push_back(static_cast<int>(root + v * x + j));
            for (int e : cedges) owner.push_back(static_cast<int>(root + n * x + e));
            break;
        }
        case CliqueVariant::SeparatorCycles: {
            const long long gsize = ipow(k, 10), cons = ipow(k, 3), ce = choose2(k);
            const int c0 = static_cast<int>(n + m + (n + m) * gsize);
            const long long cres0 = k + ce;
            owner.assign(cres0 + ipow(k, 4), kUnassigned);
            for (int i = 0; i < k; ++i) owner[i] = clique[i];
            for (std::size_t i = 0; i < cedges.size(); ++i) owner[k + i] = n + cedges[i];
            // Targets of the first k clique edges each take one distinguished resource.
            std::vector<char> marked(cons, 0);
            for (int i = 0; i < k; ++i) {
                owner[cres0 + i] = c0 + cedges[i];
                marked[cedges[i]] = 1;
            }
            long long next = cres0 + k;
            for (long long c = 0; c < cons; ++c)
                for (int j = marked[c] ? 1 : 0; j < k; ++j) owner[next++] = static_cast<int>(c0 + c);
            break;
        }
        case CliqueVariant::SeparatingPathDag:
        case CliqueVariant::SeparatingPathScc: {
            const int ce = static_cast<int>(choose2(k));
            const int star0 = n + m, s = 2 * n + m, t = s + 1;
            std::vector<char> in_clique_edge(m, 0), in_clique(n, 0);
            for (int e : cedges) in_clique_edge[e] = 1;
            for (int v : clique) in_clique[v] = 1;
            owner.assign(m + 2 * n + k + 1 + (variant == CliqueVariant::SeparatingPathScc ? 1 : 0), kUnassigned);
            int dist = 0, plain = ce;
            for (int e = 0; e < m; ++e) owner[in_clique_edge[e] ? dist++ : plain++] = n + e;
            int vres = m;
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < (in_clique[v] ? 2 : 1); ++c) owner[vres++] = v;
            for (int i = 0; i < n; ++i) owner[m + n + k + i] = star0 + i;
            owner[m + 2 * n + k] = s;
            if (variant == CliqueVariant::SeparatingPathScc) owner[m + 2 * n + k + 1] = t;
            break;
        }
        case CliqueVariant::WelfareThreshold: {
            owner.push_back(0);
            for (int v : clique) owner.push_back(1 + v);
            for (int e : cedges) owner.push_back(1 + n + e);
            break;
        }
    }
    return Allocation(std::move(owner));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
    std::uint64_t x;
    do x = engine_();
    while (x > limit);
    return x % bound;
}

namespace {

std::vector<std::vector<Utility>> random_utilities(Rng& rng, int n, int m, PreferenceClass prefs,
                                                   Utility max_u) {
    const bool identical = is_identical(prefs);
    const bool zero_one = is_zero_one(prefs) || max_u < 2;
    auto draw = [&] { return zero_one ? static_cast<Utility>(rng.below(2)) : static_cast<Utility>(rng.below(max_u + 1)); };
    std::vector<std::vector<Utility>> u(n, std::vector<Utility>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < m; ++r) u[i][r] = (identical && i > 0) ? u[0][r] : draw();
    if (m == 0 || n == 0) return u;
    if (!zero_one && m > 0) {
        // Make sure the matrix is not 0/1.
        bool big = false;
        for (const auto& row : u)
            for (Utility v : row) big = big || v >= 2;
        if (!big) {
            const int r = static_cast<int>(rng.below(m));
            const Utility v = 2 + static_cast<Utility>(rng.below(max_u - 1));
            if (identical)
                for (auto& row : u) row[r] = v;
            else
                u[rng.below(n)][r] = v;
        }
    }
    if (!identical && n >= 2) {
        bool all_same = true;
        for (int i = 1; i < n; ++i) all_same = all_same && u[i] == u[0];
        if (all_same) {
            const int r = static_cast<int>(rng.below(m));
            u[1][r] = u[1][r] == 0 ? (zero_one ? 1 : 1 + static_cast<Utility>(rng.below(max_u))) : 0;
            if (!zero_one && u[1][r] == 0 && u[0][r] < 2) {
                // Keep the matrix non-0/1 after zeroing.
                bool big = false;
                for (const auto& row : u)
                    for (Utility v : row) big = big || v >= 2;
                if (!big) u[0][r] = 2;
            }
        }
    }
    return u;
}

std::vector<Arc> random_arcs(Rng& rng, int n, GraphKind kind) {
    std::vector<Arc> arcs;
    switch (kind) {
        case GraphKind::Acyclic:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (rng.chance(1, 2)) arcs.emplace_back(a, b);
            break;
        case GraphKind::StronglyConnected: {
            if (n < 2) break;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
            std::set<Arc> set;
            for (int i = 0; i < n; ++i) set.emplace(perm[i], perm[(i + 1) % n]);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b && rng.chance(1, 5)) set.emplace(a, b);
            arcs.assign(set.begin(), set.end());
            break;
        }
        case GraphKind::General:
            for (int attempt = 0;; ++attempt) {
                arcs.clear();
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (a != b && rng.chance(3, 10)) arcs.emplace_back(a, b);
                if (n < 3) break;
                const Digraph g(n, arcs);
                const Condensation c = scc_condensation(g);
                if (c.components.size() > 1 && c.components.size() < static_cast<std::size_t>(n)) break;
            }
            break;
    }
    return arcs;
}

}  // namespace

Instance gen_random(int n, int m, PreferenceClass prefs, GraphKind graph, Utility max_utility,
                    std::uint64_t seed) {
    Rng rng(seed);
    auto u = random_utilities(rng, n, m, prefs, max_utility);
    auto arcs = random_arcs(rng, n, graph);
    return make_instance(u, std::move(arcs));
}

std::optional<std::vector<int>> find_clique(int vertices,
                                            const std::vector<std::pair<int, int>>& edges, int k) {
    std::vector<std::vector<char>> adj(vertices, std::vector<char>(vertices, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    if (k <= 0) return std::vector<int>{};
    std::vector<int> pick;
    std::function<bool(int)> grow = [&](int from) {
        if (static_cast<int>(pick.size()) == k) return true;
        for (int v = from; v < vertices; ++v) {
            bool ok = true;
            for (int w : pick) ok = ok && adj[v][w];
            if (!ok) continue;
            pick.push_back(v);
            if (grow(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (grow(0)) return pick;
    return std::nullopt;
}

bool clique_oracle(int vertices, const std::vector<std::pair<int, int>>& edges, int k) {
    return find_clique(vertices, edges, k).has_value();
}

const char* to_string(CliqueVariant v) {
    switch (v) {
        case CliqueVariant::RootCycleOutDegree: return "thm44";
        case CliqueVariant::RootCycleFewResources: return "thm44-res";
        case CliqueVariant::SeparatorCycles: return "thm48";
        case CliqueVariant::SeparatingPathDag: return "prop56";
        case CliqueVariant::SeparatingPathScc: return "prop56-scc";
        case CliqueVariant::WelfareThreshold: return "prop63";
    }
    return "?";
}

const char* to_string(BinPackingVariant v) {
    switch (v) {
        case BinPackingVariant::BinChainPath: return "thm58";
        case BinPackingVariant::BinChainCycle: return "thm58-cycle";
        case BinPackingVariant::DummyLadder: return "prop53";
    }
    return "?";
}

}  // namespace gef
