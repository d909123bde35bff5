#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gef {

using Utility = std::int64_t;
using Arc = std::pair<int, int>;

constexpr int kUnassigned = -1;

class InvalidInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a solver is called outside the class of instances it handles.
class GuardViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Agents that share a utility row point at the same entry of `rows`.
struct Instance {
    std::vector<std::string> agents;
    std::vector<std::string> resources;
    std::vector<std::vector<Utility>> rows;
    std::vector<int> row_of;
    std::vector<Arc> arcs;  // sorted, unique, no self-loops

    int n() const { return static_cast<int>(agents.size()); }
    int m() const { return static_cast<int>(resources.size()); }
    Utility u(int agent, int resource) const { return rows[row_of[agent]][resource]; }
    const std::vector<Utility>& row(int agent) const { return rows[row_of[agent]]; }
};

// Validates and builds an instance from a dense n x m matrix.
Instance make_instance(std::vector<std::string> agents, std::vector<std::string> resources,
                       const std::vector<std::vector<Utility>>& utilities, std::vector<Arc> arcs);

// Same, with agent i using row rows[row_of[i]].
Instance make_instance(std::vector<std::string> agents, std::vector<std::string> resources,
                       std::vector<std::vector<Utility>> rows, std::vector<int> row_of,
                       std::vector<Arc> arcs);

// Builds an instance with generated names a0.. and r0..
Instance make_instance(const std::vector<std::vector<Utility>>& utilities, std::vector<Arc> arcs);

std::vector<std::vector<Utility>> dense_utilities(const Instance& inst);

// Resource -> agent map; kUnassigned marks unallocated resources.
struct Allocation {
    std::vector<int> owner;

    Allocation() = default;
    explicit Allocation(int m) : owner(m, kUnassigned) {}
    explicit Allocation(std::vector<int> o) : owner(std::move(o)) {}
    bool operator==(const Allocation&) const = default;
};

enum class FairnessNotion { Weak, Strict };
enum class EfficiencyGoal { Complete, Pareto, MaxWelfare };
enum class PreferenceClass { IdenticalZeroOne, Identical, ZeroOne, General };

struct PreferenceProfile {
    PreferenceClass cls;
    int u_diff;
};

enum class Verdict { Feasible, Infeasible, BudgetExceeded };

struct SolveResult {
    Verdict verdict = Verdict::Infeasible;
    Allocation allocation;
    Utility welfare = 0;
    std::int64_t nodes = 0;
    std::string algorithm;

    bool feasible() const { return verdict == Verdict::Feasible; }
};

const char* to_string(FairnessNotion v);
const char* to_string(EfficiencyGoal v);
const char* to_string(PreferenceClass v);
const char* to_string(Verdict v);

std::vector<std::vector<int>> bundles(const Instance& inst, const Allocation& alloc);
Utility bundle_utility(const Instance& inst, int agent, const std::vector<int>& bundle);
// u_i(pi(i)) for every agent.
std::vector<Utility> agent_utilities(const Instance& inst, const Allocation& alloc);

// Lexicographically first arc violating the notion, or nullopt when fair.
std::optional<Arc> verify_fairness(const Instance& inst, const Allocation& alloc,
                                   FairnessNotion notion);
bool is_complete(const Instance& inst, const Allocation& alloc);
Utility utilitarian_welfare(const Instance& inst, const Allocation& alloc);
bool dominates(const Instance& inst, const Allocation& a, const Allocation& b);

struct StrippedInstance {
    Instance inst;
    std::vector<int> kept;  // new resource index -> old resource index
};

StrippedInstance strip_zero_resources(const Instance& inst);

// Maps an allocation of the stripped instance back; dropped resources go to `zero_owner`.
Allocation lift_allocation(const StrippedInstance& s, const Allocation& small, int m_original,
                           int zero_owner);

PreferenceProfile classify_preferences(const Instance& inst);
bool is_identical(PreferenceClass c);
bool is_zero_one(PreferenceClass c);

// Sub-instance on the given agents (sorted), keeping arcs among them.
Instance induced_instance(const Instance& inst, const std::vector<int>& agents);

}  // namespace gef
