#include <doctest.h>

#include <set>

#include "gef/exact.hpp"
#include "gef/graph.hpp"
#include "gef/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gef;
using namespace testing;

namespace {
std::vector<Structure> all_structures(const Instance& inst) {
    std::vector<Structure> out;
    enumerate_structures(inst, [&](const Structure& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

Instance bag(std::vector<Utility> row) { return make_instance({row}, {}); }
}  // namespace

TEST_CASE("enumerate_structures counts") {
    CHECK(all_structures(bag({})).empty());
    CHECK(all_structures(bag({1})).size() == 1);
    const auto two = all_structures(bag({1, 1}));
    CHECK(two.size() == 2 + 4 * 3);
    int one_pack = 0;
    for (const auto& s : two) one_pack += s.packs.size() == 1;
    CHECK(one_pack == 2);
    CHECK(two.front().packs == std::vector<std::vector<int>>{{0, 1}});
    CHECK_THROWS_AS(all_structures(bag({1, 0})), GuardViolation);
    CHECK_THROWS_AS(all_structures(make_instance({{1}, {2}}, {})), GuardViolation);
}

TEST_CASE("enumerate_structures stream is duplicate-free and well-formed") {
    const Instance inst = bag({1, 2, 3});
    std::set<std::tuple<std::vector<std::vector<int>>, std::vector<int>, std::vector<Arc>>> seen;
    for (const Structure& s : all_structures(inst)) {
        CHECK(seen.emplace(s.packs, s.weight, s.arcs).second);
        std::vector<int> hit(3, 0);
        for (const auto& p : s.packs)
            for (int r : p) ++hit[r];
        CHECK(hit == std::vector<int>{1, 1, 1});
        for (int w : s.weight) CHECK((w >= 1 && w <= 3));
        CHECK(topological_order(Digraph(static_cast<int>(s.packs.size()), s.arcs)).has_value());
    }
    // Bell(3) partitions, weights 3^q, DAG counts 1, 3, 25.
    CHECK(seen.size() == 1 * 3 * 1 + 3 * 9 * 3 + 1 * 27 * 25);
}

TEST_CASE("check_structure_sanity examples") {
    const Instance ones = bag({1, 1});
    CHECK(check_structure_sanity(ones, Structure{{{0, 1}}, {2}, {}}));
    CHECK_FALSE(check_structure_sanity(bag({1}), Structure{{{0}}, {2}, {}}));
    const Instance vals = bag({1, 2});
    CHECK_FALSE(check_structure_sanity(vals, Structure{{{0}, {1}}, {1, 1}, {{0, 1}}}));
    CHECK(check_structure_sanity(vals, Structure{{{0}, {1}}, {1, 1}, {{1, 0}}}));
}

TEST_CASE("directed_colored_subiso examples") {
    const ColoredDigraph red{1, {}, {1}};
    const ColoredDigraph host{3, {{0, 1}}, {2, 1, 2}};
    const auto m = directed_colored_subiso(red, host);
    REQUIRE(m);
    CHECK(*m == std::vector<int>{1});
    const ColoredDigraph tri{3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1}};
    const ColoredDigraph dag{4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, {1, 1, 1, 1}};
    CHECK_FALSE(directed_colored_subiso(tri, dag));
    CHECK(directed_colored_subiso(ColoredDigraph{}, dag));
}

TEST_CASE("gadget_reduce examples") {
    const auto [p0, h0] = gadget_reduce(ColoredDigraph{}, ColoredDigraph{});
    CHECK(p0.n == 0);
    CHECK(h0.edges.empty());
    const auto [p1, h1] = gadget_reduce(ColoredDigraph{1, {}, {1}}, ColoredDigraph{});
    CHECK(p1.n == 7);
    CHECK(p1.edges.size() == 8);
    // One arc: 2 endpoints + 2 subdivision vertices, 3 dummies, 4 bulbs.
    const auto [p2, h2] = gadget_reduce(ColoredDigraph{2, {{0, 1}}, {1, 1}}, ColoredDigraph{});
    const int q = 1;
    const int bulbs = 2 * (1 + 2 + (2 + q)) + (1 + 2 + (2 + q + 1)) + (1 + 2 + (2 + q + 2));
    CHECK(p2.n == 4 + 3 + bulbs);
}

TEST_CASE("solve_gef_identical_structures examples") {
    const Instance ab = make_instance(std::vector<std::vector<Utility>>(3, {1, 1, 1}), {{0, 1}, {1, 0}, {0, 2}});
    const SolveResult r = solve_gef_identical_structures(ab);
    REQUIRE(r.feasible());
    CHECK_FALSE(verify_fairness(ab, r.allocation, FairnessNotion::Weak));
    CHECK(is_complete(ab, r.allocation));
    const auto b = bundles(ab, r.allocation);
    CHECK(b[0].size() == 1);
    CHECK(b[1].size() == 1);
    CHECK(b[2].size() == 1);

    CHECK_FALSE(solve_gef_identical_structures(cycle(3, std::vector<Utility>(5, 1))).feasible());
    const Instance p = path(4, {2, 1, 3});
    CHECK(solve_gef_identical_structures(p).feasible());
    CHECK_THROWS_AS(solve_gef_identical_structures(table1(false)), GuardViolation);
}

TEST_CASE("property: colored matcher equals injective-map enumeration") {
    Rng rng(51);
    int found = 0;
    for (int i = 0; i < 400; ++i) {
        const ColoredDigraph p = random_colored(rng, 1 + static_cast<int>(rng.below(4)), 2, 1, 3);
        const ColoredDigraph h = random_colored(rng, 1 + static_cast<int>(rng.below(6)), 2, 1, 2);
        const auto m = directed_colored_subiso(p, h);
        CHECK(m.has_value() == oracle::colored_embedding_exists(to_oracle(p), to_oracle(h)));
        if (!m) continue;
        ++found;
        std::set<int> images(m->begin(), m->end());
        CHECK(images.size() == m->size());
        for (int v = 0; v < p.n; ++v) CHECK(p.color[v] == h.color[(*m)[v]]);
        for (auto [a, b] : p.arcs)
            CHECK(std::find(h.arcs.begin(), h.arcs.end(), Arc{(*m)[a], (*m)[b]}) != h.arcs.end());
    }
    CHECK(found > 50);
    CHECK(found < 380);
}

TEST_CASE("property: gadget reduction preserves the matching verdict") {
    Rng rng(52);
    for (int i = 0; i < 40; ++i) {
        const ColoredDigraph p = random_colored(rng, 1 + static_cast<int>(rng.below(3)), 2, 1, 3);
        const ColoredDigraph h = random_colored(rng, 1 + static_cast<int>(rng.below(4)), 2, 1, 3);
        const auto [gp, gh] = gadget_reduce(p, h);
        CHECK(directed_colored_subiso(p, h).has_value() == oracle::undirected_subgraph(gp.n, gp.edges, gh.n, gh.edges));
    }
}

TEST_CASE("property: structure solver agrees with the oracle") {
    int feasible = 0;
    for (auto pc : {PreferenceClass::IdenticalZeroOne, PreferenceClass::Identical})
        for (auto gk : kGraphs)
            for (const Instance& inst : corpus(pc, gk, 40, 5, 4, 53)) {
                const SolveResult r = solve_gef_identical_structures(inst);
                REQUIRE(r.verdict != Verdict::BudgetExceeded);
                CHECK(r.feasible() == oracle::complete_fair_exists(inst, false));
                if (r.feasible()) {
                    ++feasible;
                    CHECK_FALSE(verify_fairness(inst, r.allocation, FairnessNotion::Weak));
                    CHECK(is_complete(inst, r.allocation));
                }
            }
    CHECK(feasible > 0);
}
