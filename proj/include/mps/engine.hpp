#ifndef MPS_ENGINE_HPP
#define MPS_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mps/dataset.hpp"
#include "mps/lattice.hpp"
#include "mps/mps_store.hpp"
#include "mps/varset.hpp"

namespace mps {

// Raised for unusable engine configurations (e.g. a memory budget smaller
// than the worst-case layer-1 frontier).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineConfig {
    int workers = 0;            // 0 = hardware concurrency
    std::uint64_t memory_budget_bytes = std::numeric_limits<std::uint64_t>::max();
    int chunks_per_worker = 4;  // work-partition multiple per worker
    int max_layer = -1;         // hard depth cap, <0 = n
    int dfs_force_layer = -1;   // forced DFS switch at this layer (testing), <0 = never
    bool pruning_enabled = true;

    // Test instrumentation: invoked once per processed node with its
    // survivor set. Calls are serialized, so this throttles parallelism.
    std::function<void(const LatticeNode&, const VarSet& survivors)> node_observer;
};

struct RunStats {
    std::vector<std::uint64_t> layer_nodes;   // folded tasks processed per layer
    std::vector<std::uint64_t> layer_targets; // (Xi,U) evaluations per layer
    // Worst-case materialized bytes estimated for layer L before it is
    // built, indexed by L; entry 1 is the root bootstrap estimate.
    std::vector<std::uint64_t> layer_estimate_bytes;
    int l_max = 0;              // deepest processed layer
    int l_z = 0;                // last layer contributing a verified maximal parent set
    std::uint64_t z = 0;        // total maximal parent sets after verification
    std::uint64_t z_f = 0;      // flagged entries that required verification
    std::uint64_t nodes_processed = 0;
    std::uint64_t pruned_by_cond1 = 0;
    std::uint64_t pruned_by_cond2 = 0;
    int dfs_switch_layer = -1;  // -1 = ran entirely in BFS mode
    std::uint64_t peak_frontier_bytes = 0;
    double wall_seconds = 0.0;
    int workers = 1;
};

struct RunResult {
    std::vector<MpsList> lists; // per variable, canonical indexing
    RunStats stats;
};

// Cost of one materialized frontier node: the two-bitmap representation,
// no per-node overhead beyond it.
inline constexpr std::uint64_t kBytesPerNode = sizeof(LatticeNode);

// Worst-case bytes of the layer following `frontier` under the
// max-element rule: sum over nodes of (n - 1 - max bit of parents) slots.
// A true upper bound, since survivor sets and empty-target drops only
// shrink the real successor count.
std::uint64_t worst_case_successor_bytes(std::span<const LatticeNode> frontier, int n);

// Layer-synchronous exploration of the folded lattice: initializes every
// L(Xi) with the empty-set entry, expands layers in BFS mode with a
// barrier merge after each, switches the current frontier to per-node DFS
// tasks when the two-layers-ahead estimate exceeds the memory budget (or
// when forced), then verifies flagged entries. The verified lists are
// identical across worker counts, chunking, and switch layers.
RunResult run(const Dataset& ds, const EngineConfig& cfg);

} // namespace mps

#endif // MPS_ENGINE_HPP
