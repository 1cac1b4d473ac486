#ifndef MPS_LATTICE_HPP
#define MPS_LATTICE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "mps/varset.hpp"

namespace mps {

// One folded task of the subset lattice: `parents` is the candidate parent
// set U shared by every target variable in `targets`. Invariants:
// targets and parents are disjoint, targets is nonempty for any node
// admitted to a layer, and the layer index equals |parents|.
struct LatticeNode {
    VarSet targets;
    VarSet parents;
};

inline LatticeNode root(int n) {
    return LatticeNode{VarSet::full(n), VarSet{}};
}

// Worst-case successor count of a node under the max-element rule.
inline int successor_slots(const LatticeNode& node, int n) {
    return n - 1 - node.parents.max_bit();
}

// Max-element successor enumeration: with j the maximal canonical element
// of `parents`, the node spawns parents+{k} for every j < k < n, so each
// subset is generated by exactly one predecessor and no intra-layer
// synchronization is needed. `survivors` (a subset of node.targets) are
// the targets for which neither pruning condition held; successors whose
// target set would be empty are dropped at generation time.
inline void append_successors(const LatticeNode& node, const VarSet& survivors,
                              int n, std::vector<LatticeNode>& out) {
    for (int k = node.parents.max_bit() + 1; k < n; ++k) {
        VarSet targets = survivors.without(k);
        if (targets.empty()) continue;
        out.push_back(LatticeNode{targets, node.parents.with(k)});
    }
}

inline std::vector<LatticeNode> successors(const LatticeNode& node,
                                           const VarSet& survivors, int n) {
    std::vector<LatticeNode> out;
    append_successors(node, survivors, n, out);
    return out;
}

// C(n, l), saturating at uint64 max. Unpruned upper bound on the folded
// layer size; used by the memory estimator tests only.
inline std::uint64_t layer_node_count(int n, int l) {
    if (l < 0 || l > n) return 0;
    if (l > n - l) l = n - l;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (int i = 1; i <= l; ++i) {
        // c * (n - l + i) / i, kept exact by dividing through gcd-free order
        std::uint64_t num = static_cast<std::uint64_t>(n - l + i);
        if (c > kMax / num) return kMax;
        c = c * num / static_cast<std::uint64_t>(i);
    }
    return c;
}

} // namespace mps

#endif // MPS_LATTICE_HPP
