#include "gef/dispatch.hpp"

#include <algorithm>

#include "gef/efficiency.hpp"
#include "gef/graph.hpp"
#include "gef/poly.hpp"
#include "gef/structure.hpp"

namespace gef {

const std::vector<std::string>& algorithm_ids() {
    static const std::vector<std::string> ids = {"auto",     "brute",      "ilp",        "dag",
                                                 "scc-id01", "alg1",       "ident-enum", "sgef-fpt",
                                                 "struct-fpt", "manyvalues", "alg2"};
    return ids;
}

std::string select_algorithm(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal) {
    if (goal != EfficiencyGoal::Complete) return "efficiency";
    const StrippedInstance s = strip_zero_resources(inst);
    const PreferenceProfile p = classify_preferences(s.inst);
    const GraphClass g = classify_graph(inst);
    const bool identical = is_identical(p.cls);
    const bool cyclic = has_cycle(digraph_of(inst));
    if (notion == FairnessNotion::Strict) {
        if (identical && cyclic) return "immediate-infeasible";
        if (p.cls == PreferenceClass::IdenticalZeroOne) return "alg1";
        if (identical && p.u_diff > inst.n()) return "manyvalues";
        return "sgef-fpt";
    }
    if (g.kind == GraphKind::Acyclic) return "dag";
    if (p.cls == PreferenceClass::IdenticalZeroOne && g.kind == GraphKind::StronglyConnected)
        return "scc-id01";
    if (identical && g.kind == GraphKind::StronglyConnected) return "ident-enum";
    if (identical) return "struct-fpt";
    return "ilp";
}

namespace {

void require(bool ok, const std::string& algorithm, const char* what) {
    if (!ok) throw GuardViolation(algorithm + ": " + what);
}

SolveResult run_auto(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                     std::int64_t budget) {
    const std::string algo = select_algorithm(inst, notion, goal);
    SolveResult r;
    if (algo == "efficiency") return solve_efficient(inst, notion, goal, budget);
    if (algo == "immediate-infeasible") return infeasible_result("immediate-infeasible");
    if (algo == "alg1") return solve_sgef_id01(inst);
    if (algo == "manyvalues") return solve_sgef_identical_manyvalues(inst);
    if (algo == "dag") return solve_gef_dag(inst);
    if (algo == "scc-id01") return solve_gef_id01_scc(inst);
    if (algo == "ilp") return solve_type_ilp(build_type_ilp(inst, notion));
    if (algo == "sgef-fpt") {
        r = solve_sgef_fpt_resources(inst, budget);
        if (r.verdict != Verdict::BudgetExceeded) return r;
        return solve_type_ilp(build_type_ilp(inst, notion));
    }
    if (algo == "ident-enum") r = solve_identical_enum(inst, budget);
    else r = solve_gef_identical_structures(inst, budget);
    if (r.verdict != Verdict::BudgetExceeded) return r;
    return brute_force(inst, notion, goal, budget);
}

}  // namespace

SolveResult solve(const Instance& inst, FairnessNotion notion, EfficiencyGoal goal,
                  const std::string& algorithm, std::int64_t budget) {
    const bool weak = notion == FairnessNotion::Weak;
    const bool complete = goal == EfficiencyGoal::Complete;
    const std::string& a = algorithm;
    if (a == "auto") return run_auto(inst, notion, goal, budget);
    if (a == "brute") return brute_force(inst, notion, goal, budget);
    if (a == "ilp") {
        require(complete, a, "goal must be complete");
        return solve_type_ilp(build_type_ilp(inst, notion));
    }
    if (a == "alg2") {
        require(weak, a, "notion must be weak");
        return solve_efficient_dag(inst, goal);
    }
    require(complete, a, "goal must be complete");
    if (a == "dag") {
        require(weak, a, "notion must be weak");
        return solve_gef_dag(inst);
    }
    if (a == "scc-id01") {
        require(weak, a, "notion must be weak");
        return solve_gef_id01_scc(inst);
    }
    if (a == "ident-enum") {
        require(weak, a, "notion must be weak");
        return solve_identical_enum(inst, budget);
    }
    if (a == "struct-fpt") {
        require(weak, a, "notion must be weak");
        return solve_gef_identical_structures(inst, budget);
    }
    if (a == "alg1") {
        require(!weak, a, "notion must be strict");
        return solve_sgef_id01(inst);
    }
    if (a == "manyvalues") {
        require(!weak, a, "notion must be strict");
        return solve_sgef_identical_manyvalues(inst);
    }
    if (a == "sgef-fpt") {
        require(!weak, a, "notion must be strict");
        return solve_sgef_fpt_resources(inst, budget);
    }
    throw GuardViolation("unknown algorithm: " + a);
}

}  // namespace gef
