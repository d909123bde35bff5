#pragma once

#include <optional>
#include <vector>

#include "gef/model.hpp"

namespace gef {

struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    Digraph() = default;
    Digraph(int vertices, const std::vector<Arc>& arcs);
};

Digraph digraph_of(const Instance& inst);

// Components ordered by smallest member; members sorted.
struct Condensation {
    std::vector<std::vector<int>> components;
    std::vector<Arc> comp_arcs;  // sorted, unique
    std::vector<int> comp_of;
};

Condensation scc_condensation(const Digraph& g);
Condensation scc_condensation(const Instance& inst);

enum class GraphKind { Acyclic, StronglyConnected, General };

struct GraphClass {
    GraphKind kind = GraphKind::Acyclic;
    int max_outdegree = 0;
    std::vector<int> sources;
    std::vector<int> sinks;
    std::vector<int> inner;
};

GraphClass classify_graph(const Instance& inst);
const char* to_string(GraphKind k);

bool has_cycle(const Digraph& g);

// Kahn's order, smallest available vertex first; nullopt on a cycle.
std::optional<std::vector<int>> topological_order(const Digraph& g);

// Longest-path labels of the reversed graph with a super-source feeding all
// out-degree-0 agents, minus one. nullopt when the graph has a cycle.
std::optional<std::vector<int>> longest_path_labels(const Instance& inst);

// Sorted set of agents reachable from `start` (inclusive).
std::vector<int> reachable_from(const Digraph& g, const std::vector<int>& start);
std::vector<int> reachable_from(const Instance& inst, const std::vector<int>& start);

}  // namespace gef
