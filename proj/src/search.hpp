#pragma once

#include <cstdint>
#include <vector>

#include "gef/model.hpp"

namespace gef::detail {

// Depth-first assignment of resources 0..m-1 to candidate owners, keeping
// per-arc bundle values current so each leaf is checked in O(|arcs|).
class AssignmentSearch {
public:
    enum class Outcome { Exhausted, Stopped, Budget };

    AssignmentSearch(const Instance& inst, std::int64_t budget)
        : inst_(inst), budget_(budget), owner_(inst.m(), kUnassigned), own_(inst.n(), 0),
          rhs_(inst.arcs.size(), 0), in_arcs_(inst.n()) {
        for (int k = 0; k < static_cast<int>(inst.arcs.size()); ++k)
            in_arcs_[inst.arcs[k].second].push_back(k);
    }

    // choices[r] lists owners for resource r in enumeration order. `leaf`
    // returns true to stop; `keep` (called before descending past resource r)
    // returns false to skip the subtree.
    template <class Leaf, class Keep>
    Outcome run(const std::vector<std::vector<int>>& choices, Leaf&& leaf, Keep&& keep) {
        stop_ = false;
        over_ = false;
        dfs(0, choices, leaf, keep);
        if (over_) return Outcome::Budget;
        return stop_ ? Outcome::Stopped : Outcome::Exhausted;
    }

    template <class Leaf>
    Outcome run(const std::vector<std::vector<int>>& choices, Leaf&& leaf) {
        return run(choices, leaf, [](int, Utility) { return true; });
    }

    bool fair(FairnessNotion notion) const {
        for (int k = 0; k < static_cast<int>(inst_.arcs.size()); ++k) {
            const Utility own = own_[inst_.arcs[k].first];
            if (notion == FairnessNotion::Weak ? own < rhs_[k] : own <= rhs_[k]) return false;
        }
        return true;
    }

    const std::vector<int>& owner() const { return owner_; }
    const std::vector<Utility>& own() const { return own_; }
    Utility welfare() const { return welfare_; }
    std::int64_t nodes() const { return nodes_; }

private:
    template <class Leaf, class Keep>
    void dfs(int r, const std::vector<std::vector<int>>& choices, Leaf& leaf, Keep& keep) {
        if (r == inst_.m()) {
            if (leaf(*this)) stop_ = true;
            return;
        }
        for (int o : choices[r]) {
            if (++nodes_ > budget_) {
                over_ = true;
                return;
            }
            assign(r, o, +1);
            if (keep(r + 1, welfare_)) dfs(r + 1, choices, leaf, keep);
            assign(r, o, -1);
            if (stop_ || over_) return;
        }
    }

    void assign(int r, int o, int sign) {
        owner_[r] = sign > 0 ? o : kUnassigned;
        if (o == kUnassigned) return;
        const Utility v = inst_.u(o, r);
        own_[o] += sign * v;
        welfare_ += sign * v;
        for (int k : in_arcs_[o]) rhs_[k] += sign * inst_.u(inst_.arcs[k].first, r);
    }

    const Instance& inst_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    bool stop_ = false;
    bool over_ = false;
    std::vector<int> owner_;
    std::vector<Utility> own_;
    std::vector<Utility> rhs_;
    std::vector<std::vector<int>> in_arcs_;
    Utility welfare_ = 0;
};

inline std::vector<std::vector<int>> same_choices(int m, const std::vector<int>& owners) {
    return std::vector<std::vector<int>>(m, owners);
}

}  // namespace gef::detail
