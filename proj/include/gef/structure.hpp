#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gef/exact.hpp"
#include "gef/model.hpp"

namespace gef {

// A guessed shape of a solution: resources grouped into packs, each pack
// destined for one strongly connected component of `weight` agents.
struct Structure {
    std::vector<std::vector<int>> packs;
    std::vector<int> weight;
    std::vector<Arc> arcs;  // between pack indices, acyclic
};

struct ColoredDigraph {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<int> color;  // >= 1
};

struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Calls `visit` on every structure in canonical order (partitions as
// restricted-growth strings, weights lexicographic, arc sets by bitmask over
// ordered pairs) until it returns false. Needs identical preferences and no
// all-zero resources.
void enumerate_structures(const Instance& inst, const std::function<bool(const Structure&)>& visit);

bool check_structure_sanity(const Instance& inst, const Structure& s);

// Injective, color-preserving map pattern -> host with every pattern arc
// landing on a host arc.
std::optional<std::vector<int>> directed_colored_subiso(const ColoredDigraph& pattern,
                                                        const ColoredDigraph& host);

// Subdivision, dummy and bulb transformation; colors of both inputs must be
// 1..q for a shared q.
std::pair<UndirectedGraph, UndirectedGraph> gadget_reduce(const ColoredDigraph& pattern,
                                                          const ColoredDigraph& host);

// Weak, complete; identical preferences on any graph.
SolveResult solve_gef_identical_structures(const Instance& inst,
                                           std::int64_t budget = kDefaultBudget);

}  // namespace gef
