#include <doctest.h>

#include "gef/exact.hpp"
#include "gef/graph.hpp"
#include "gef/poly.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gef;
using namespace testing;

TEST_CASE("brute_force examples") {
    const Instance c = cycle(2, {2, 1, 1});
    const SolveResult r = brute_force(c, FairnessNotion::Weak, EfficiencyGoal::Complete);
    REQUIRE(r.feasible());
    CHECK(r.allocation.owner == std::vector<int>{0, 1, 1});
    CHECK_FALSE(brute_force(c, FairnessNotion::Strict, EfficiencyGoal::Complete).feasible());
    CHECK(brute_force(table1(true), FairnessNotion::Weak, EfficiencyGoal::Complete).verdict == Verdict::Infeasible);
    CHECK(brute_force(table1(false), FairnessNotion::Weak, EfficiencyGoal::Complete).feasible());
    CHECK(brute_force(table1(true), FairnessNotion::Weak, EfficiencyGoal::Complete, 5).verdict ==
          Verdict::BudgetExceeded);
}

TEST_CASE("brute_force max welfare picks the lexicographically first optimum") {
    const Instance c = cycle(2, {2, 1, 1});
    const SolveResult r = brute_force(c, FairnessNotion::Weak, EfficiencyGoal::MaxWelfare);
    REQUIRE(r.feasible());
    CHECK(r.welfare == 4);
    CHECK(r.allocation.owner == std::vector<int>{0, 1, 1});
}

TEST_CASE("build_type_ilp counts") {
    const IlpModel weak = build_type_ilp(cycle(2, {3, 2, 1}), FairnessNotion::Weak);
    CHECK(weak.variable_count() == 6);
    CHECK(weak.equality_rows() == 3);
    CHECK(weak.inequality_rows() == 2);
    CHECK(weak.delta == 0);
    const IlpModel strict = build_type_ilp(cycle(2, {3, 2, 1}), FairnessNotion::Strict);
    CHECK(strict.delta == 1);
    CHECK(strict.inequality_rows() == 2);
    const Instance id01 = strip_zero_resources(cycle(3, {1, 0, 1, 1})).inst;
    const IlpModel one = build_type_ilp(id01, FairnessNotion::Weak);
    CHECK(one.table.types.size() == 1);
    CHECK(one.variable_count() == 3);
}

TEST_CASE("resource types are lossless") {
    const Instance inst = make_instance({{1, 2, 1, 0}, {3, 0, 3, 0}}, {});
    const ResourceTypeTable t = resource_types(inst);
    CHECK(t.types.size() == 3);
    int total = 0;
    for (int c : t.multiplicity) total += c;
    CHECK(total == 4);
    for (int r = 0; r < inst.m(); ++r)
        for (int a = 0; a < inst.n(); ++a) CHECK(t.types[t.type_of[r]][a] == inst.u(a, r));
}

TEST_CASE("solve_type_ilp examples") {
    const Instance c = cycle(2, {3, 2, 1});
    const SolveResult r = solve_type_ilp(build_type_ilp(c, FairnessNotion::Weak));
    REQUIRE(r.feasible());
    CHECK_FALSE(verify_fairness(c, r.allocation, FairnessNotion::Weak));
    CHECK(is_complete(c, r.allocation));
    CHECK_FALSE(solve_type_ilp(build_type_ilp(cycle(3, std::vector<Utility>(5, 1)), FairnessNotion::Weak)).feasible());
    const Instance single = make_instance({{4, 1, 0}}, {});
    const SolveResult s = solve_type_ilp(build_type_ilp(single, FairnessNotion::Strict));
    REQUIRE(s.feasible());
    CHECK(s.allocation.owner == std::vector<int>{0, 0, 0});
}

TEST_CASE("solve_identical_enum examples") {
    CHECK(solve_identical_enum(cycle(2, {2, 1, 1})).feasible());
    const SolveResult small = solve_identical_enum(cycle(3, {1, 1}));
    CHECK_FALSE(small.feasible());
    CHECK(small.nodes == 0);
    CHECK_FALSE(solve_identical_enum(cycle(2, {3, 1})).feasible());
    CHECK_THROWS_AS(solve_identical_enum(path(2, {1})), GuardViolation);
}

TEST_CASE("prune_large_sccs examples") {
    const Instance big = make_instance(std::vector<std::vector<Utility>>(4, {1, 1}), {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const PrunedInstance p = prune_large_sccs(big, 2);
    CHECK(p.inst.n() == 0);
    CHECK(p.removed == std::vector<int>{0, 1, 2, 3});

    const Instance fine = cycle(2, {1, 1});
    const PrunedInstance id = prune_large_sccs(fine, 2);
    CHECK(id.kept == std::vector<int>{0, 1});
    CHECK(id.removed.empty());
    CHECK(id.inst.arcs == fine.arcs);

    const Instance chain = make_instance(std::vector<std::vector<Utility>>(4, {1}), {{0, 2}, {1, 2}, {2, 3}});
    const PrunedInstance c = prune_large_sccs(chain, 1);
    CHECK(c.kept == std::vector<int>{0, 1});
    CHECK(c.removed == std::vector<int>{2, 3});
    CHECK(oracle::complete_fair_exists(chain, false) == oracle::complete_fair_exists(c.inst, false));
}

TEST_CASE("solve_sgef_fpt_resources examples") {
    CHECK_FALSE(solve_sgef_fpt_resources(path(3, {1})).feasible());
    const SolveResult single = solve_sgef_fpt_resources(make_instance({{1, 1}}, {}));
    REQUIRE(single.feasible());
    CHECK(single.allocation.owner == std::vector<int>{0, 0});
    const Instance feed = make_instance({{1, 2, 1}, {2, 1, 1}, {1, 1, 1}, {3, 1, 1}}, {{0, 1}, {1, 0}, {0, 2}, {1, 3}});
    const SolveResult r = solve_sgef_fpt_resources(feed);
    CHECK(r.feasible() == oracle::complete_fair_exists(feed, true));
}

TEST_CASE("property: exact solvers agree with the oracle") {
    for (auto pc : kPrefs)
        for (auto gk : kGraphs)
            for (const Instance& inst : corpus(pc, gk, 60, 4, 5, 31)) {
                for (bool strict : {false, true}) {
                    const FairnessNotion notion = strict ? FairnessNotion::Strict : FairnessNotion::Weak;
                    const bool truth = oracle::complete_fair_exists(inst, strict);
                    const SolveResult b = brute_force(inst, notion, EfficiencyGoal::Complete);
                    const SolveResult i = solve_type_ilp(build_type_ilp(inst, notion));
                    CHECK(b.feasible() == truth);
                    CHECK(i.feasible() == truth);
                    for (const SolveResult* r : {&b, &i})
                        if (r->feasible()) {
                            CHECK_FALSE(verify_fairness(inst, r->allocation, notion));
                            CHECK(is_complete(inst, r->allocation));
                        }
                    if (strict) {
                        const SolveResult f = solve_sgef_fpt_resources(inst);
                        CHECK(f.feasible() == truth);
                        if (f.feasible()) CHECK_FALSE(verify_fairness(inst, f.allocation, notion));
                    }
                }
                const Instance stripped = strip_zero_resources(inst).inst;
                if (is_identical(classify_preferences(stripped).cls) && strongly_connected(inst)) {
                    const SolveResult e = solve_identical_enum(inst);
                    CHECK(e.feasible() == oracle::complete_fair_exists(inst, false));
                }
            }
}

TEST_CASE("property: type counts expand to matching bundle utilities") {
    for (const Instance& inst : corpus(PreferenceClass::General, GraphKind::General, 40, 4, 5, 32)) {
        const IlpModel model = build_type_ilp(inst, FairnessNotion::Weak);
        const SolveResult r = solve_type_ilp(model);
        if (!r.feasible()) continue;
        const int types = static_cast<int>(model.table.types.size());
        std::vector<std::vector<int>> x(inst.n(), std::vector<int>(types, 0));
        for (int res = 0; res < inst.m(); ++res) ++x[r.allocation.owner[res]][model.table.type_of[res]];
        for (int a = 0; a < inst.n(); ++a) {
            Utility sum = 0;
            for (int t = 0; t < types; ++t) sum += x[a][t] * model.table.types[t][a];
            CHECK(sum == oracle::value_of(inst, a, a, r.allocation.owner));
        }
    }
}

TEST_CASE("property: pruning large components preserves feasibility") {
    int fired = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const int m = 1 + static_cast<int>(seed / 5 % 3);
        const auto gk = seed % 2 ? GraphKind::General : GraphKind::Acyclic;
        if (gk == GraphKind::General && n < 3) continue;
        const Instance inst = gen_random(n, m, PreferenceClass::Identical, gk, 3, 4000 + seed);
        const int m_eff = strip_zero_resources(inst).inst.m();
        const PrunedInstance p = prune_large_sccs(inst, m_eff);
        if (p.removed.empty()) continue;
        ++fired;
        CHECK(oracle::complete_fair_exists(inst, false) == oracle::complete_fair_exists(p.inst, false));
    }
    CHECK(fired > 20);
}
