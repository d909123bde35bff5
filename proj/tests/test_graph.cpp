#include <doctest.h>

#include <algorithm>

#include "gef/graph.hpp"
#include "support.hpp"

using namespace gef;
using namespace testing;

namespace {
Instance graph_only(int n, std::vector<Arc> arcs) {
    return make_instance(std::vector<std::vector<Utility>>(n, std::vector<Utility>{}), std::move(arcs));
}
}  // namespace

TEST_CASE("scc_condensation examples") {
    const Condensation two = scc_condensation(graph_only(2, {{0, 1}, {1, 0}}));
    CHECK(two.components == std::vector<std::vector<int>>{{0, 1}});
    CHECK(two.comp_arcs.empty());

    const Condensation p = scc_condensation(graph_only(3, {{0, 1}, {1, 2}}));
    CHECK(p.components.size() == 3);
    CHECK(p.comp_arcs.size() == 2);

    const Condensation fig = scc_condensation(table1(false));
    CHECK(fig.components == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(fig.comp_arcs == std::vector<Arc>{{0, 1}});
}

TEST_CASE("classify_graph examples") {
    const GraphClass p = classify_graph(graph_only(3, {{0, 1}, {1, 2}}));
    CHECK(p.kind == GraphKind::Acyclic);
    CHECK(p.max_outdegree == 1);
    CHECK(p.sources == std::vector<int>{0});
    CHECK(p.sinks == std::vector<int>{2});
    CHECK(p.inner == std::vector<int>{1});

    const GraphClass c = classify_graph(graph_only(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(c.kind == GraphKind::StronglyConnected);
    CHECK(c.max_outdegree == 1);
    CHECK(c.sources.empty());
    CHECK(c.sinks.empty());

    const GraphClass f = classify_graph(table1(false));
    CHECK(f.kind == GraphKind::General);
    CHECK(f.max_outdegree == 2);

    const GraphClass iso = classify_graph(graph_only(2, {}));
    CHECK(iso.sources == std::vector<int>{0, 1});
    CHECK(iso.sinks == std::vector<int>{0, 1});
    CHECK(iso.inner.empty());
}

TEST_CASE("longest_path_labels examples") {
    CHECK(*longest_path_labels(graph_only(3, {{0, 1}, {1, 2}})) == std::vector<int>{2, 1, 0});
    CHECK(*longest_path_labels(graph_only(3, {{0, 1}, {0, 2}})) == std::vector<int>{1, 0, 0});
    CHECK_FALSE(longest_path_labels(graph_only(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("reachable_from examples") {
    const Instance p = graph_only(3, {{0, 1}, {1, 2}});
    CHECK(reachable_from(p, {0}) == std::vector<int>{0, 1, 2});
    CHECK(reachable_from(p, {}).empty());
    CHECK(reachable_from(table1(false), {2}) == std::vector<int>{1, 2});
}

TEST_CASE("property: condensation is a DAG partition with exact crossing arcs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.below(8));
        std::vector<Arc> arcs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && rng.chance(1, 4)) arcs.emplace_back(a, b);
        const Instance inst = graph_only(n, arcs);
        const Condensation c = scc_condensation(inst);
        std::vector<int> seen(n, 0);
        for (std::size_t k = 0; k < c.components.size(); ++k)
            for (int v : c.components[k]) {
                ++seen[v];
                CHECK(c.comp_of[v] == static_cast<int>(k));
            }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
        CHECK(topological_order(Digraph(static_cast<int>(c.components.size()), c.comp_arcs)).has_value());
        std::vector<Arc> crossing;
        for (auto [a, b] : arcs)
            if (c.comp_of[a] != c.comp_of[b]) crossing.emplace_back(c.comp_of[a], c.comp_of[b]);
        std::sort(crossing.begin(), crossing.end());
        crossing.erase(std::unique(crossing.begin(), crossing.end()), crossing.end());
        CHECK(crossing == c.comp_arcs);

        // Reachability is monotone.
        std::vector<int> s, t;
        for (int v = 0; v < n; ++v) {
            if (rng.chance(1, 3)) s.push_back(v);
            if (rng.chance(1, 2) || std::find(s.begin(), s.end(), v) != s.end()) t.push_back(v);
        }
        const auto rs = reachable_from(inst, s), rt = reachable_from(inst, t);
        CHECK(std::includes(rt.begin(), rt.end(), rs.begin(), rs.end()));
    }
}

TEST_CASE("property: longest path labels drop along every arc of a DAG") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Instance inst = gen_random(1 + static_cast<int>(seed % 8), 0, PreferenceClass::IdenticalZeroOne,
                                         GraphKind::Acyclic, 1, seed);
        const auto labels = longest_path_labels(inst);
        REQUIRE(labels);
        for (auto [a, b] : inst.arcs) CHECK((*labels)[a] >= (*labels)[b] + 1);
    }
}
