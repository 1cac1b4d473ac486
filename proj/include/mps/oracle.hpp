#ifndef MPS_ORACLE_HPP
#define MPS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mps/dataset.hpp"
#include "mps/mps_store.hpp"
#include "mps/varset.hpp"

// Brute-force reference for small n: evaluates the MDL score for every
// (Xi, U) with an independent single-target scorer, solves the optimal
// parent set recursion by exhaustive memoization over all subsets, and
// derives maximal parent sets directly from the definitions. Ground truth
// for equivalence testing; deliberately shares no scoring code with the
// engine path.
namespace mps::oracle {

inline constexpr int kMaxVars = 20; // 2^n tables

// Dense per-variable tables indexed by subset bitmask over the canonical
// universe (masks containing the variable's own bit are unused).
// d[u] = min(s[u], min over one-element-removed subsets of d).
struct OracleTables {
    int n = 0;
    std::vector<std::vector<double>> s; // [var][mask]
    std::vector<std::vector<double>> d; // [var][mask]
};

OracleTables build_tables(const Dataset& ds);

// Score of the optimal parent set of `var` drawn from `u`.
double optimal_score(const OracleTables& tables, int var, const VarSet& u);

// All maximal parent sets per variable, canonical entry order, unflagged.
// Directly comparable with the engine's verified output.
std::vector<MpsList> brute_force(const Dataset& ds);
std::vector<MpsList> brute_force(const OracleTables& tables);

// The independent single-target scorer (exposed for scoring-kernel
// equivalence tests): s(Xi, U) by direct conditional-probability
// accumulation, not the engine's n*log2(n) table path.
double single_target_score(const Dataset& ds, int var, const VarSet& parents);

} // namespace mps::oracle

#endif // MPS_ORACLE_HPP
