#pragma once

#include <cstdint>
#include <vector>

#include "gef/generators.hpp"
#include "gef/model.hpp"
#include "gef/structure.hpp"
#include "oracles.hpp"

namespace testing {

using namespace gef;

inline const PreferenceClass kPrefs[] = {PreferenceClass::IdenticalZeroOne, PreferenceClass::Identical,
                                         PreferenceClass::ZeroOne, PreferenceClass::General};
inline const GraphKind kGraphs[] = {GraphKind::Acyclic, GraphKind::StronglyConnected, GraphKind::General};

// Random instances with sizes cycling through 1..max_n and 0..max_m.
inline std::vector<Instance> corpus(PreferenceClass pc, GraphKind gk, int count, int max_n, int max_m,
                                    std::uint64_t seed) {
    std::vector<Instance> out;
    const int min_n = gk == GraphKind::General ? 3 : 1;
    for (int i = 0; i < count; ++i) {
        const int n = min_n + i % (max_n - min_n + 1);
        const int m = (i / 3) % (max_m + 1);
        out.push_back(gen_random(n, m, pc, gk, 3, seed * 1000003ULL + i));
    }
    return out;
}

inline Instance path(int n, const std::vector<Utility>& row) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return make_instance(std::vector<std::vector<Utility>>(n, row), arcs);
}

inline Instance cycle(int n, const std::vector<Utility>& row) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n && n > 1; ++i) arcs.emplace_back(i, (i + 1) % n);
    return make_instance(std::vector<std::vector<Utility>>(n, row), arcs);
}

inline Instance table1(bool complete_graph) {
    std::vector<Arc> arcs = {{0, 1}, {0, 2}, {1, 2}, {2, 1}};
    if (complete_graph) arcs = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    return make_instance({"KAM", "B2BSM", "ISM"}, {"course", "tv", "office", "award"},
                         {{0, 0, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}, arcs);
}

// Colors drawn from 1..colors; each ordered pair is an arc with probability num/den.
inline ColoredDigraph random_colored(Rng& rng, int n, int colors, std::uint64_t num, std::uint64_t den) {
    ColoredDigraph g;
    g.n = n;
    for (int v = 0; v < n; ++v) g.color.push_back(1 + static_cast<int>(rng.below(colors)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && rng.chance(num, den)) g.arcs.emplace_back(a, b);
    return g;
}

inline oracle::Colored to_oracle(const ColoredDigraph& g) { return {g.n, g.arcs, g.color}; }

}  // namespace testing
