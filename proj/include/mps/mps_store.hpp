#ifndef MPS_MPS_STORE_HPP
#define MPS_MPS_STORE_HPP

#include <cstdint>
#include <vector>

#include "mps/varset.hpp"

namespace mps {

// One maximal parent set of a variable: the exact MDL score s(Xi, parents)
// plus a flag for entries discovered in DFS mode and pending global
// verification.
struct MpsEntry {
    VarSet parents;
    double score;
    bool flagged = false;
};

// Canonical total order: (score asc, |parents| asc, bitmask asc, unflagged
// first). Stricter than a score-only sort so that merged lists are
// byte-reproducible across thread counts and exploration modes.
bool entry_less(const MpsEntry& a, const MpsEntry& b);

// Per-variable list L(Xi) of maximal parent sets, kept in canonical order.
// No two entries share the same parents set, and after verification no
// entry is dominated by a strict subset with a smaller-or-equal score.
struct MpsList {
    std::vector<MpsEntry> entries;
};

// d(Xi, U) lookup: the smallest score among entries whose parents are a
// subset of U. The list is score-sorted, so the first subset hit is the
// answer (an O(|L|) scan). Returns +infinity on a list without the empty
// set entry (only the engine's root bootstrap sees that state).
double query_d(const MpsList& list, const VarSet& u);

// True iff `score` beats every entry whose parents are a strict subset of
// `u`. Ties lose: a candidate equal to a subset's score is not maximal.
bool maximality_test(const MpsList& list, const VarSet& u, double score);

// One delta batch: entries for one variable produced during a layer (BFS)
// or a DFS task.
using DeltaBatch = std::vector<std::pair<int, MpsEntry>>;

// Barrier reduction: folds worker-local delta batches into the global
// per-variable lists, deduplicating identical parents sets and restoring
// canonical order. Runs single-threaded at a layer barrier.
void merge(std::vector<MpsList>& global, const std::vector<DeltaBatch>& deltas);

// Post-DFS verification: scans entries in canonical order; a flagged entry
// is dropped when an already-accepted entry's parents are a subset of its
// own (the accepted entry's score is <= by the scan order), otherwise it
// is accepted and unflagged. Returns the number of flagged entries seen.
std::uint64_t verify_flagged(MpsList& list);

} // namespace mps

#endif // MPS_MPS_STORE_HPP
