// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "../tests/oracles.hpp"
#include "../tests/support.hpp"
#include "gef/dispatch.hpp"
#include "gef/efficiency.hpp"
#include "gef/exact.hpp"
#include "gef/graph.hpp"
#include "gef/io.hpp"
#include "gef/poly.hpp"
#include "gef/structure.hpp"

using namespace gef;
using namespace testing;

namespace {

struct Tally {
    long long checks = 0;
    long long failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

bool criterion(int id, const char* title, const std::function<std::string(Tally&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string detail;
    try {
        detail = body(t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failures == 0 && t.checks > 0;
    std::printf("%s criterion %d: %s (%lld checks, %s, %.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, title, t.checks,
                detail.c_str(), secs, pass ? "" : " first failure: ", pass ? "" : t.first.c_str());
    std::fflush(stdout);
    return pass;
}

std::string describe(const Instance& inst) { return instance_to_json(inst).dump(); }

bool fair_complete(const Instance& inst, const SolveResult& r, FairnessNotion notion) {
    return !verify_fairness(inst, r.allocation, notion) && is_complete(inst, r.allocation);
}

std::string worked_example(Tally& t) {
    const Instance full = table1(true), fig1 = table1(false);
    for (const char* algo : {"auto", "brute", "ilp"}) {
        const SolveResult no = solve(full, FairnessNotion::Weak, EfficiencyGoal::Complete, algo);
        t.expect(no.verdict == Verdict::Infeasible, std::string(algo) + ": complete graph not infeasible");
        const SolveResult yes = solve(fig1, FairnessNotion::Weak, EfficiencyGoal::Complete, algo);
        t.expect(yes.feasible() && fair_complete(fig1, yes, FairnessNotion::Weak),
                 std::string(algo) + ": sparse graph has no verified witness");
        if (yes.feasible())
            t.expect(yes.allocation.owner[2] == 0 && yes.allocation.owner[3] == 0,
                     std::string(algo) + ": KAM does not hold office and award");
    }
    return "complete graph infeasible, sparse graph feasible";
}

// Every solver whose guard holds, for one notion.
std::vector<std::string> applicable(const Instance& inst, FairnessNotion notion) {
    const Instance stripped = strip_zero_resources(inst).inst;
    const PreferenceProfile p = classify_preferences(stripped);
    const bool acyclic = !has_cycle(digraph_of(inst));
    const bool scc = strongly_connected(inst);
    std::vector<std::string> out{"auto", "ilp"};
    if (notion == FairnessNotion::Weak) {
        if (acyclic) out.push_back("dag");
        if (p.cls == PreferenceClass::IdenticalZeroOne && scc) out.push_back("scc-id01");
        if (is_identical(p.cls) && scc) out.push_back("ident-enum");
        if (is_identical(p.cls)) out.push_back("struct-fpt");
    } else {
        out.push_back("sgef-fpt");
        if (p.cls == PreferenceClass::IdenticalZeroOne) out.push_back("alg1");
        if (is_identical(p.cls) && acyclic && (inst.n() <= 1 || p.u_diff > inst.n())) out.push_back("manyvalues");
    }
    return out;
}

std::string oracle_equivalence(Tally& t) {
    std::ostringstream detail;
    for (auto pc : kPrefs) {
        int count = 0;
        for (auto gk : kGraphs)
            for (const Instance& inst : corpus(pc, gk, 170, 4, 5, 1000 + static_cast<int>(pc) * 10 + static_cast<int>(gk))) {
                ++count;
                for (auto notion : {FairnessNotion::Weak, FairnessNotion::Strict}) {
                    const SolveResult truth = brute_force(inst, notion, EfficiencyGoal::Complete);
                    t.expect(truth.verdict != Verdict::BudgetExceeded, "brute budget on " + describe(inst));
                    t.expect(truth.feasible() == oracle::complete_fair_exists(inst, notion == FairnessNotion::Strict),
                             "brute differs from the oracle on " + describe(inst));
                    if (truth.feasible()) t.expect(fair_complete(inst, truth, notion), "brute witness fails");
                    for (const std::string& algo : applicable(inst, notion)) {
                        const SolveResult r = solve(inst, notion, EfficiencyGoal::Complete, algo);
                        const std::string tag = algo + "/" + to_string(notion) + " on " + describe(inst);
                        t.expect(r.verdict == truth.verdict, "verdict mismatch " + tag);
                        if (r.feasible()) t.expect(fair_complete(inst, r, notion), "witness fails " + tag);
                    }
                }
            }
        detail << to_string(pc) << "=" << count << " ";
    }
    std::string s = detail.str();
    s.pop_back();
    return s;
}

std::string divisibility(Tally& t) {
    int cases = 0;
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= 10; ++m) {
            const Instance shape = gen_random(n, 0, PreferenceClass::IdenticalZeroOne, GraphKind::StronglyConnected, 1,
                                              3000 + n * 11 + m);
            const Instance inst = make_instance(std::vector<std::vector<Utility>>(n, std::vector<Utility>(m, 1)), shape.arcs);
            const bool want = m % n == 0;
            const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            t.expect(strongly_connected(inst), "not strongly connected " + tag);
            for (const char* algo : {"auto", "scc-id01", "brute"})
                t.expect(solve(inst, FairnessNotion::Weak, EfficiencyGoal::Complete, algo).feasible() == want,
                         std::string(algo) + " breaks divisibility at " + tag);
            ++cases;
        }
    return std::to_string(cases) + " (n, m) pairs";
}

std::string cycle_impossibility(Tally& t) {
    int cases = 0;
    for (auto pc : {PreferenceClass::IdenticalZeroOne, PreferenceClass::Identical})
        for (auto gk : {GraphKind::StronglyConnected, GraphKind::General})
            for (const Instance& inst : corpus(pc, gk, 150, 5, 5, 4000 + static_cast<int>(pc) * 10 + static_cast<int>(gk))) {
                if (!has_cycle(digraph_of(inst))) continue;
                ++cases;
                const std::string tag = describe(inst);
                t.expect(select_algorithm(inst, FairnessNotion::Strict, EfficiencyGoal::Complete) == "immediate-infeasible",
                         "dispatcher does not short-circuit " + tag);
                t.expect(solve(inst, FairnessNotion::Strict, EfficiencyGoal::Complete).verdict == Verdict::Infeasible,
                         "auto not infeasible " + tag);
                t.expect(brute_force(inst, FairnessNotion::Strict, EfficiencyGoal::Complete).verdict == Verdict::Infeasible,
                         "brute not infeasible " + tag);
                if (classify_preferences(strip_zero_resources(inst).inst).cls == PreferenceClass::IdenticalZeroOne)
                    t.expect(solve_sgef_id01(inst).verdict == Verdict::Infeasible, "alg1 not infeasible " + tag);
            }
    return std::to_string(cases) + " cyclic instances";
}

std::string alg1_threshold(Tally& t) {
    int shapes = 0;
    Rng rng(5000);
    for (int n = 1; n <= 6; ++n)
        for (int variant = 0; variant < 5; ++variant) {
            // 0: path, 1-2: out-trees, 3-4: in-trees; parents have lower index.
            std::vector<Arc> arcs;
            for (int v = 1; v < n; ++v) {
                const int parent = variant == 0 ? v - 1 : static_cast<int>(rng.below(v));
                arcs.push_back(variant <= 2 ? Arc{parent, v} : Arc{v, parent});
            }
            const Instance shape = make_instance(std::vector<std::vector<Utility>>(n, std::vector<Utility>{}), arcs);
            const auto labels = longest_path_labels(shape);
            t.expect(labels.has_value(), "tree has a cycle");
            if (!labels) continue;
            const int need = std::accumulate(labels->begin(), labels->end(), 0);
            ++shapes;
            for (int m = 0; m <= std::max(7, need + 1); ++m) {
                const Instance inst =
                    make_instance(std::vector<std::vector<Utility>>(n, std::vector<Utility>(m, 1)), arcs);
                const std::string tag = "m=" + std::to_string(m) + " " + describe(shape);
                const SolveResult a = solve_sgef_id01(inst);
                t.expect(a.feasible() == (m >= need), "alg1 off the threshold " + tag);
                if (a.feasible()) t.expect(fair_complete(inst, a, FairnessNotion::Strict), "alg1 witness fails " + tag);
                if (m <= 7)
                    t.expect(brute_force(inst, FairnessNotion::Strict, EfficiencyGoal::Complete).feasible() == (m >= need),
                             "brute off the threshold " + tag);
            }
        }
    return std::to_string(shapes) + " paths and trees";
}

std::string gadget_equivalence(Tally& t) {
    Rng rng(6000);
    int pairs = 0, matches = 0;
    for (; pairs < 220; ++pairs) {
        const ColoredDigraph p = random_colored(rng, 1 + static_cast<int>(rng.below(3)), 2, 1, 3);
        const ColoredDigraph h = random_colored(rng, 1 + static_cast<int>(rng.below(5)), 2, 1, 3);
        const bool direct = directed_colored_subiso(p, h).has_value();
        const auto [gp, gh] = gadget_reduce(p, h);
        const bool generic = oracle::undirected_subgraph(gp.n, gp.edges, gh.n, gh.edges);
        t.expect(direct == generic, "gadget verdict differs for pair " + std::to_string(pairs));
        matches += direct;
    }
    return std::to_string(pairs) + " pairs, " + std::to_string(matches) + " embeddable";
}

std::string efficiency_laws(Tally& t) {
    int identical = 0, zero_one = 0, complete_not_pareto = 0;
    auto check = [&](const Instance& raw, bool identical_law) {
        const Instance inst = strip_zero_resources(raw).inst;
        const auto vectors = oracle::utility_vectors(inst);
        const Utility bound = max_welfare_bound(inst);
        const std::string tag = describe(inst);
        oracle::for_each_allocation(inst.n(), inst.m(), true, [&](const std::vector<int>& o) {
            if (!oracle::fair(inst, o, false)) return;
            const bool complete = std::find(o.begin(), o.end(), kUnassigned) == o.end();
            const bool pareto = oracle::pareto(vectors, oracle::utilities(inst, o));
            const bool optimal = oracle::welfare(inst, o) == bound;
            if (identical_law) {
                t.expect(complete == pareto && pareto == optimal, "identical law fails on " + tag);
            } else {
                t.expect(!optimal || pareto, "optimal but not Pareto on " + tag);
                t.expect(!pareto || complete, "Pareto but not complete on " + tag);
                if (complete && !pareto) ++complete_not_pareto;
            }
        });
    };
    for (auto pc : {PreferenceClass::IdenticalZeroOne, PreferenceClass::Identical})
        for (auto gk : kGraphs)
            for (const Instance& inst : corpus(pc, gk, 40, 3, 4, 7000 + static_cast<int>(pc) * 10 + static_cast<int>(gk))) {
                check(inst, true);
                ++identical;
            }
    for (auto gk : kGraphs)
        for (const Instance& inst : corpus(PreferenceClass::ZeroOne, gk, 80, 3, 4, 7100 + static_cast<int>(gk))) {
            check(inst, false);
            ++zero_one;
        }
    t.expect(complete_not_pareto > 0, "no complete GEF allocation that is not Pareto-efficient");
    return std::to_string(identical) + " identical, " + std::to_string(zero_one) + " 0/1, " +
           std::to_string(complete_not_pareto) + " complete-not-Pareto allocations";
}

void compositions(int parts, Utility total, std::vector<Utility>& cur,
                  const std::function<void(const std::vector<Utility>&)>& f) {
    if (parts == 0) {
        if (total == 0) f(cur);
        return;
    }
    for (Utility s = 1; s <= total - (parts - 1); ++s) {
        cur.push_back(s);
        compositions(parts - 1, total - s, cur, f);
        cur.pop_back();
    }
}

std::string binpacking_soundness(Tally& t) {
    int inputs = 0, yes = 0;
    for (int k = 1; k <= 2; ++k)
        for (Utility B = 1; B <= 5; ++B)
            for (int n = 1; n <= 4; ++n) {
                std::vector<Utility> cur;
                compositions(n, k * B, cur, [&](const std::vector<Utility>& sizes) {
                    const BinPackingInput in{sizes, B, k};
                    const bool packs = oracle::bin_packing(sizes, B, k);
                    const Generated g = gen_from_binpacking(in, BinPackingVariant::BinChainPath);
                    const SolveResult r = brute_force(g.instance, g.notion, g.goal);
                    t.expect(r.verdict != Verdict::BudgetExceeded, "budget");
                    t.expect(r.feasible() == packs, "feasibility differs from packing on " + describe(g.instance));
                    ++inputs;
                    yes += packs;
                });
            }
    return std::to_string(inputs) + " inputs, " + std::to_string(yes) + " packable";
}

std::vector<std::pair<int, int>> random_graph(Rng& rng, int n, int max_edges) {
    std::vector<std::pair<int, int>> all, edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    const int count = static_cast<int>(rng.below(std::min<int>(max_edges, static_cast<int>(all.size())) + 1));
    edges.assign(all.begin(), all.begin() + count);
    return edges;
}

std::string welfare_soundness(Tally& t) {
    Rng rng(9000);
    int cases = 0, cliques = 0;
    for (int k = 2; k <= 3; ++k)
        for (int n = k + 1; n <= 5; ++n)
            for (int rep = 0; rep < 12; ++rep) {
                const CliqueInput in{n, random_graph(rng, n, 6), k};
                const Generated g = gen_from_clique(in, CliqueVariant::WelfareThreshold);
                const SolveResult r = brute_force(g.instance, FairnessNotion::Weak, EfficiencyGoal::MaxWelfare);
                t.expect(r.verdict == Verdict::Feasible, "no fair allocation at all");
                const bool has = clique_oracle(n, in.edges, k);
                t.expect((r.welfare >= *g.threshold) == has, "threshold differs from clique on " + describe(g.instance));
                t.expect(r.welfare <= *g.threshold, "welfare above threshold");
                ++cases;
                cliques += has;
            }
    return std::to_string(cases) + " graphs, " + std::to_string(cliques) + " with a clique";
}

std::string planted_fidelity(Tally& t) {
    auto planted_ok = [&](const CliqueInput& in, CliqueVariant v, long long agents, long long resources,
                          int max_out, const char* label) {
        const Generated g = gen_from_clique(in, v);
        const GraphClass gc = classify_graph(g.instance);
        const std::string tag = std::string(label) + " ";
        t.expect(g.instance.n() == agents, tag + "agent count " + std::to_string(g.instance.n()));
        t.expect(g.instance.m() == resources, tag + "resource count " + std::to_string(g.instance.m()));
        t.expect(gc.max_outdegree <= max_out, tag + "out-degree " + std::to_string(gc.max_outdegree));
        if (v == CliqueVariant::SeparatorCycles) t.expect(gc.kind == GraphKind::StronglyConnected, tag + "not strongly connected");
        if (v == CliqueVariant::SeparatingPathDag) t.expect(gc.kind == GraphKind::Acyclic, tag + "not acyclic");
        const auto clique = find_clique(in.vertices, in.edges, in.k);
        t.expect(clique.has_value(), tag + "input has no clique");
        if (!clique) return;
        const Allocation a = planted_allocation(in, v, *clique);
        t.expect(!verify_fairness(g.instance, a, g.notion), tag + "planted allocation is not fair");
        t.expect(is_complete(g.instance, a), tag + "planted allocation is not complete");
    };
    auto p4 = [](long long x) { return x * x * x * x; };

    const CliqueInput k3{3, {{0, 1}, {1, 2}, {0, 2}}, 3};
    planted_ok(k3, CliqueVariant::RootCycleFewResources, 6591, 6591, 2, "thm44-res triangle");
    const CliqueInput paw{4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, 3};
    const long long x = 4 * 4;
    planted_ok(paw, CliqueVariant::RootCycleOutDegree, p4(x) + 4 * x + 4, p4(x) + 3 * x + 3, 2, "thm44 paw");
    planted_ok(paw, CliqueVariant::RootCycleFewResources, p4(9) + 4 * 9 + 4, p4(9) + 3 * 9 + 3, 3, "thm44-res paw");

    const CliqueInput tri_edge{5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}, 3};
    const long long k10 = 59049;
    planted_ok(tri_edge, CliqueVariant::SeparatorCycles, (5 + 4) * (k10 + 1) + 27, 3 + 3 + 81, 3, "thm48");
    for (auto v : {CliqueVariant::SeparatingPathDag, CliqueVariant::SeparatingPathScc})
        planted_ok(tri_edge, v, 2 * 5 + 4 + 2, 4 + 2 * 5 + 3 + 1 + (v == CliqueVariant::SeparatingPathScc), 3, to_string(v));
    const CliqueInput pair{4, {{0, 1}, {2, 3}, {1, 2}}, 2};
    for (auto v : {CliqueVariant::SeparatingPathDag, CliqueVariant::SeparatingPathScc})
        planted_ok(pair, v, 2 * 4 + 3 + 2, 3 + 2 * 4 + 2 + 1 + (v == CliqueVariant::SeparatingPathScc), 3, to_string(v));
    return "thm44, thm48, prop56 counts, out-degree and planted witnesses";
}

}  // namespace

int main() {
    bool ok = true;
    ok &= criterion(1, "worked example", worked_example);
    ok &= criterion(2, "oracle equivalence", oracle_equivalence);
    ok &= criterion(3, "divisibility law", divisibility);
    ok &= criterion(4, "cycle impossibility", cycle_impossibility);
    ok &= criterion(5, "strict 0/1 labelling threshold", alg1_threshold);
    ok &= criterion(6, "gadget equivalence", gadget_equivalence);
    ok &= criterion(7, "efficiency equivalences", efficiency_laws);
    ok &= criterion(8, "bin packing generator soundness", binpacking_soundness);
    ok &= criterion(9, "welfare generator soundness", welfare_soundness);
    ok &= criterion(10, "planted clique and structural fidelity", planted_fidelity);
    return ok ? 0 : 1;
}
