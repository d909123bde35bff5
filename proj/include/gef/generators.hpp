#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gef/graph.hpp"
#include "gef/model.hpp"

namespace gef {

struct CliqueInput {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

struct BinPackingInput {
    std::vector<Utility> sizes;
    Utility bin_size = 0;
    int bins = 0;
};

enum class CliqueVariant {
    RootCycleOutDegree,  // x = vertices * edges
    RootCycleFewResources,  // x = k^2
    SeparatorCycles,
    SeparatingPathDag,
    SeparatingPathScc,
    WelfareThreshold,
};

enum class BinPackingVariant { BinChainPath, BinChainCycle, DummyLadder };

struct Generated {
    Instance instance;
    FairnessNotion notion = FairnessNotion::Weak;
    EfficiencyGoal goal = EfficiencyGoal::Complete;
    std::optional<Utility> threshold;  // welfare target, set by the welfare variant
};

// Throws InvalidInstance when the input violates the variant's assumptions.
Generated gen_from_clique(const CliqueInput& input, CliqueVariant variant);
Generated gen_from_binpacking(const BinPackingInput& input, BinPackingVariant variant);

// The forward-direction allocation built from `clique` (k vertex indices).
Allocation planted_allocation(const CliqueInput& input, CliqueVariant variant,
                              const std::vector<int>& clique);

// mt19937_64 stream with rejection-sampled ranges, so output is identical
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

Instance gen_random(int n, int m, PreferenceClass prefs, GraphKind graph, Utility max_utility,
                    std::uint64_t seed);

std::optional<std::vector<int>> find_clique(int vertices,
                                            const std::vector<std::pair<int, int>>& edges, int k);
bool clique_oracle(int vertices, const std::vector<std::pair<int, int>>& edges, int k);

const char* to_string(CliqueVariant v);
const char* to_string(BinPackingVariant v);

}  // namespace gef
