#include "gef/graph.hpp"

#include <algorithm>
#include <queue>

namespace gef {

Digraph::Digraph(int vertices, const std::vector<Arc>& arcs)
    : n(vertices), out(vertices), in(vertices) {
    for (const auto& [a, b] : arcs) {
        out[a].push_back(b);
        in[b].push_back(a);
    }
}

Digraph digraph_of(const Instance& inst) { return Digraph(inst.n(), inst.arcs); }

Condensation scc_condensation(const Digraph& g) {
    // Iterative Tarjan.
    const int n = g.n;
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        call.emplace_back(s, 0);
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < g.out[v].size()) {
                const int w = g.out[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            const int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }

    // Renumber components by smallest member.
    int next = 0;
    std::vector<int> order(ncomp, -1);
    for (int v = 0; v < n; ++v)
        if (order[comp[v]] < 0) order[comp[v]] = next++;
    Condensation c;
    c.components.assign(ncomp, {});
    c.comp_of.resize(n);
    for (int v = 0; v < n; ++v) {
        c.comp_of[v] = order[comp[v]];
        c.components[c.comp_of[v]].push_back(v);
    }
    for (int v = 0; v < n; ++v)
        for (int w : g.out[v])
            if (c.comp_of[v] != c.comp_of[w]) c.comp_arcs.emplace_back(c.comp_of[v], c.comp_of[w]);
    std::sort(c.comp_arcs.begin(), c.comp_arcs.end());
    c.comp_arcs.erase(std::unique(c.comp_arcs.begin(), c.comp_arcs.end()), c.comp_arcs.end());
    return c;
}

Condensation scc_condensation(const Instance& inst) { return scc_condensation(digraph_of(inst)); }

const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Acyclic: return "acyclic";
        case GraphKind::StronglyConnected: return "strongly-connected";
        case GraphKind::General: return "general";
    }
    return "?";
}

GraphClass classify_graph(const Instance& inst) {
    const Digraph g = digraph_of(inst);
    const Condensation c = scc_condensation(g);
    GraphClass gc;
    if (static_cast<int>(c.components.size()) == g.n)
        gc.kind = GraphKind::Acyclic;
    else if (c.components.size() == 1)
        gc.kind = GraphKind::StronglyConnected;
    else
        gc.kind = GraphKind::General;
    for (int v = 0; v < g.n; ++v) {
        gc.max_outdegree = std::max(gc.max_outdegree, static_cast<int>(g.out[v].size()));
        const bool src = g.in[v].empty(), snk = g.out[v].empty();
        if (src) gc.sources.push_back(v);
        if (snk) gc.sinks.push_back(v);
        if (!src && !snk) gc.inner.push_back(v);
    }
    return gc;
}

std::optional<std::vector<int>> topological_order(const Digraph& g) {
    std::vector<int> indeg(g.n);
    for (int v = 0; v < g.n; ++v) indeg[v] = static_cast<int>(g.in[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(g.n);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : g.out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != g.n) return std::nullopt;
    return order;
}

bool has_cycle(const Digraph& g) { return !topological_order(g).has_value(); }

std::optional<std::vector<int>> longest_path_labels(const Instance& inst) {
    const Digraph g = digraph_of(inst);
    auto order = topological_order(g);
    if (!order) return std::nullopt;
    // In the reversed graph an agent is reached from its original out-neighbours,
    // and out-degree-0 agents sit one step from the super-source.
    std::vector<int> label(g.n, 0);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        const int v = *it;
        for (int w : g.out[v]) label[v] = std::max(label[v], label[w] + 1);
    }
    return label;
}

std::vector<int> reachable_from(const Digraph& g, const std::vector<int>& start) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> todo;
    for (int s : start)
        if (!seen[s]) { seen[s] = 1; todo.push_back(s); }
    while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (int w : g.out[v])
            if (!seen[w]) { seen[w] = 1; todo.push_back(w); }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::vector<int> reachable_from(const Instance& inst, const std::vector<int>& start) {
    return reachable_from(digraph_of(inst), start);
}

}  // namespace gef
