#ifndef MPS_REFERENCE_HPP
#define MPS_REFERENCE_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "mps/dataset.hpp"
#include "mps/mps_store.hpp"
#include "mps/varset.hpp"

namespace mps {

// Serial baseline that realizes a lattice node only when every one of its
// predecessors survived, the way a fully synchronized layer-by-layer run
// would. The engine instead regenerates from a single predecessor per node
// and may therefore visit nodes this baseline skips; those extra visits
// are the price of avoiding cross-worker coordination.
struct SyncResult {
    std::vector<MpsList> lists;
    std::vector<std::uint64_t> layer_nodes;
    std::unordered_set<VarSet, VarSetHash> visited; // parent sets of scored nodes
    std::uint64_t nodes = 0;
};

SyncResult synchronized_run(const Dataset& ds, bool pruning = true,
                            int max_layer = -1);

struct ExtraWorkReport {
    std::uint64_t engine_nodes = 0;
    std::uint64_t sync_nodes = 0;
    std::uint64_t elided_nodes = 0;           // engine visits absent from the baseline
    std::uint64_t elided_with_successors = 0; // elided visits that spawned children
    double fraction = 0.0;                    // (engine_nodes - sync_nodes) / sync_nodes
};

// Runs the engine in BFS mode with an observer, runs the synchronized
// baseline, and reports how much of the engine's work the baseline proves
// redundant. The pruning conditions propagate along every predecessor
// chain, so an elided visit should have all its targets pruned and spawn
// nothing; the count is reported so tests can assert it is zero.
ExtraWorkReport measure_extra_work(const Dataset& ds, int workers = 1);

} // namespace mps

#endif // MPS_REFERENCE_HPP
