#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gef/dispatch.hpp"
#include "gef/efficiency.hpp"
#include "gef/generators.hpp"
#include "gef/io.hpp"

using namespace gef;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return kExitFeasible;
        case Verdict::Infeasible: return kExitInfeasible;
        case Verdict::BudgetExceeded: return kExitBudget;
    }
    return kExitMalformed;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) std::cout << text << "\n";
    else write_text(path, text + "\n");
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw InvalidInstance("edge must look like u-v: " + item);
        try {
            edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw InvalidInstance("bad edge: " + item);
        }
    }
    return edges;
}

PreferenceClass parse_prefs(const std::string& s) {
    if (s == "identical01") return PreferenceClass::IdenticalZeroOne;
    if (s == "identical") return PreferenceClass::Identical;
    if (s == "01") return PreferenceClass::ZeroOne;
    if (s == "general") return PreferenceClass::General;
    throw InvalidInstance("unknown preference class: " + s);
}

GraphKind parse_graph(const std::string& s) {
    if (s == "dag") return GraphKind::Acyclic;
    if (s == "scc") return GraphKind::StronglyConnected;
    if (s == "general") return GraphKind::General;
    throw InvalidInstance("unknown graph class: " + s);
}

struct SolveOptions {
    std::string instance, notion = "weak", goal = "complete", algo = "auto", out;
    std::int64_t budget = kDefaultBudget;
    bool canonical = false;
};

int run_solve(const SolveOptions& o) {
    const Instance inst = parse_instance(read_json_file(o.instance));
    const SolveResult r = solve(inst, parse_notion(o.notion), parse_goal(o.goal), o.algo, o.budget);
    emit(o.out, result_to_json(inst, r).dump(2));
    return exit_code(r.verdict);
}

struct VerifyOptions {
    std::string instance, allocation, notion = "weak", goal = "complete";
    std::int64_t budget = kDefaultBudget;
};

int run_verify(const VerifyOptions& o) {
    const Instance inst = parse_instance(read_json_file(o.instance));
    Json doc = read_json_file(o.allocation);
    if (doc.contains("verdict")) doc = doc.at("allocation");  // accept a result document
    const Allocation alloc = parse_allocation(doc, inst);
    const FairnessNotion notion = parse_notion(o.notion);
    if (auto arc = verify_fairness(inst, alloc, notion)) {
        std::cout << "violated arc " << inst.agents[arc->first] << " -> " << inst.agents[arc->second]
                  << "\n";
        return kExitInfeasible;
    }
    switch (parse_goal(o.goal)) {
        case EfficiencyGoal::Complete:
            if (!is_complete(inst, alloc)) {
                std::cout << "not complete\n";
                return kExitInfeasible;
            }
            break;
        case EfficiencyGoal::Pareto: {
            const auto pe = is_pareto_efficient(inst, alloc, o.budget);
            if (!pe) {
                std::cout << "budget exceeded\n";
                return kExitBudget;
            }
            if (!*pe) {
                std::cout << "not pareto-efficient\n";
                return kExitInfeasible;
            }
            break;
        }
        case EfficiencyGoal::MaxWelfare: {
            const SolveResult best = brute_force(inst, notion, EfficiencyGoal::MaxWelfare, o.budget);
            if (best.verdict == Verdict::BudgetExceeded) {
                std::cout << "budget exceeded\n";
                return kExitBudget;
            }
            const Utility w = utilitarian_welfare(inst, alloc);
            if (w != best.welfare) {
                std::cout << "welfare " << w << " below optimum " << best.welfare << "\n";
                return kExitInfeasible;
            }
            break;
        }
    }
    std::cout << "ok\n";
    return kExitFeasible;
}

struct GenerateOptions {
    std::string family, variant, edges, items, prefs = "general", graph = "general", out;
    int vertices = 0, k = 0, bins = 0, n = 3, m = 4;
    Utility bin_size = 0, max_utility = 3;
    std::uint64_t seed = 1;
};

int run_generate(const GenerateOptions& o) {
    Json doc;
    static const std::map<std::string, CliqueVariant> clique = {
        {"thm44", CliqueVariant::RootCycleOutDegree}, {"thm44-res", CliqueVariant::RootCycleFewResources},
        {"thm48", CliqueVariant::SeparatorCycles},          {"prop56", CliqueVariant::SeparatingPathDag},
        {"prop56-scc", CliqueVariant::SeparatingPathScc}, {"prop63", CliqueVariant::WelfareThreshold}};
    static const std::map<std::string, BinPackingVariant> packing = {
        {"thm58", BinPackingVariant::BinChainPath},
        {"thm58-cycle", BinPackingVariant::BinChainCycle},
        {"prop53", BinPackingVariant::DummyLadder}};
    if (o.family == "random") {
        doc = instance_to_json(
            gen_random(o.n, o.m, parse_prefs(o.prefs), parse_graph(o.graph), o.max_utility, o.seed));
    } else if (auto c = clique.find(o.variant); c != clique.end()) {
        const Generated g = gen_from_clique({o.vertices, parse_edges(o.edges), o.k}, c->second);
        doc = instance_to_json(g.instance, g.threshold);
    } else if (auto p = packing.find(o.variant); p != packing.end()) {
        BinPackingInput in;
        std::stringstream ss(o.items);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                in.sizes.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw InvalidInstance("bad item size: " + item);
            }
        }
        in.bin_size = o.bin_size;
        in.bins = o.bins;
        doc = instance_to_json(gen_from_binpacking(in, p->second).instance);
    } else {
        throw InvalidInstance("unknown variant: " + o.variant);
    }
    emit(o.out, doc.dump());
    return 0;
}

struct BenchOptions {
    std::string out;
    int count = 5, max_n = 4, max_m = 5;
    std::uint64_t seed = 1;
    std::int64_t budget = 10'000'000;
};

int run_bench(const BenchOptions& o) {
    std::ostringstream csv;
    csv << "instance-id,algorithm,verdict,nodes,wall-time\n";
    const std::pair<PreferenceClass, const char*> prefs[] = {
        {PreferenceClass::IdenticalZeroOne, "identical01"},
        {PreferenceClass::Identical, "identical"},
        {PreferenceClass::ZeroOne, "01"},
        {PreferenceClass::General, "general"}};
    const std::pair<GraphKind, const char*> graphs[] = {
        {GraphKind::Acyclic, "dag"}, {GraphKind::StronglyConnected, "scc"}, {GraphKind::General, "general"}};
    const std::pair<FairnessNotion, const char*> notions[] = {{FairnessNotion::Weak, "weak"},
                                                              {FairnessNotion::Strict, "strict"}};
    const std::pair<EfficiencyGoal, const char*> goals[] = {{EfficiencyGoal::Complete, "complete"},
                                                            {EfficiencyGoal::Pareto, "pareto"},
                                                            {EfficiencyGoal::MaxWelfare, "welfare"}};
    std::uint64_t seed = o.seed;
    for (const auto& [pc, pname] : prefs)
        for (const auto& [gk, gname] : graphs)
            for (int i = 0; i < o.count; ++i, ++seed) {
                const int n = std::max(gk == GraphKind::General ? 3 : 1, 1 + static_cast<int>(seed % o.max_n));
                const int m = static_cast<int>(seed * 7 % (o.max_m + 1));
                const Instance inst = gen_random(n, m, pc, gk, 3, seed);
                for (const auto& [notion, nname] : notions)
                    for (const auto& [goal, goname] : goals)
                        for (const char* algo : {"auto", "brute"}) {
                            const auto t0 = std::chrono::steady_clock::now();
                            const SolveResult r = solve(inst, notion, goal, algo, o.budget);
                            const double secs =
                                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                            csv << pname << "-" << gname << "-s" << seed << "-" << nname << "-" << goname << ","
                                << algo << ":" << r.algorithm << "," << to_string(r.verdict) << "," << r.nodes
                                << "," << secs << "\n";
                        }
            }
    emit(o.out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph envy-free allocation solver"};
    app.require_subcommand(1);
    const std::vector<std::string> notions{"weak", "strict"}, goals{"complete", "pareto", "welfare"};

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Decide feasibility and print a result document");
    solve_cmd->add_option("instance", so.instance, "Instance JSON")->required();
    solve_cmd->add_option("--notion", so.notion)->check(CLI::IsMember(notions));
    solve_cmd->add_option("--goal", so.goal)->check(CLI::IsMember(goals));
    solve_cmd->add_option("--algo", so.algo)->check(CLI::IsMember(algorithm_ids()));
    solve_cmd->add_option("--budget", so.budget, "Search node limit");
    solve_cmd->add_flag("--canonical", so.canonical, "Sequential search (always the case here)");
    solve_cmd->add_option("--out", so.out);

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Check an allocation against notion and goal");
    verify_cmd->add_option("instance", vo.instance)->required();
    verify_cmd->add_option("allocation", vo.allocation)->required();
    verify_cmd->add_option("--notion", vo.notion)->check(CLI::IsMember(notions));
    verify_cmd->add_option("--goal", vo.goal)->check(CLI::IsMember(goals));
    verify_cmd->add_option("--budget", vo.budget);

    GenerateOptions go;
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
    gen_cmd->add_option("family", go.family, "clique | binpacking | random")
        ->required()
        ->check(CLI::IsMember({"clique", "binpacking", "random"}));
    gen_cmd->add_option("--variant", go.variant,
                        "thm44 thm44-res thm48 prop56 prop56-scc prop63 | thm58 thm58-cycle prop53");
    gen_cmd->add_option("--vertices", go.vertices);
    gen_cmd->add_option("--edges", go.edges, "Comma list such as 0-1,1-2");
    gen_cmd->add_option("--k", go.k, "Clique size");
    gen_cmd->add_option("--items", go.items, "Comma list of item sizes");
    gen_cmd->add_option("--bin-size", go.bin_size);
    gen_cmd->add_option("--bins", go.bins);
    gen_cmd->add_option("--n", go.n);
    gen_cmd->add_option("--m", go.m);
    gen_cmd->add_option("--prefs", go.prefs, "identical01 | identical | 01 | general");
    gen_cmd->add_option("--graph", go.graph, "dag | scc | general");
    gen_cmd->add_option("--max-utility", go.max_utility);
    gen_cmd->add_option("--seed", go.seed);
    gen_cmd->add_option("--out", go.out);

    BenchOptions bo;
    auto* bench_cmd = app.add_subcommand("bench", "Run auto and brute on random instances, write CSV");
    bench_cmd->add_option("--out", bo.out);
    bench_cmd->add_option("--count", bo.count, "Instances per class pair");
    bench_cmd->add_option("--seed", bo.seed);
    bench_cmd->add_option("--max-n", bo.max_n);
    bench_cmd->add_option("--max-m", bo.max_m);
    bench_cmd->add_option("--budget", bo.budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }
    try {
        if (*solve_cmd) return run_solve(so);
        if (*verify_cmd) return run_verify(vo);
        if (*gen_cmd) return run_generate(go);
        if (*bench_cmd) return run_bench(bo);
    } catch (const InvalidInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const GuardViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitMalformed;
}
