#ifndef MPS_SCORING_HPP
#define MPS_SCORING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mps/dataset.hpp"
#include "mps/lattice.hpp"
#include "mps/varset.hpp"

namespace mps {

// Rows grouped by their projection onto a parent set U. Only observed
// configurations get group ids, so group_count <= min(m, prod r_j).
struct GroupIndex {
    std::vector<std::uint32_t> group_of_row;
    std::uint32_t group_count = 0;
    std::vector<std::uint32_t> group_sizes; // N_u per group
};

// MDL score components for one target variable of a folded node, in bits.
// score = m * cond_entropy + nc (up to floating tolerance).
struct TargetScore {
    int var;
    double score;
    double nc;
    double cond_entropy;
};

// Reusable per-worker scratch. Scoring functions are pure with respect to
// the dataset; a workspace may not be shared between concurrent callers.
class ScoreWorkspace {
public:
    void ensure_rows(int m) { joint_counts_.reserve(m); }

private:
    friend void group_by(const Dataset&, const VarSet&, GroupIndex&, ScoreWorkspace&);
    friend std::vector<TargetScore> score_targets(const Dataset&, const LatticeNode&,
                                                  ScoreWorkspace&);
    std::vector<std::uint32_t> remap_;
    std::vector<std::uint64_t> remap_stamp_;
    std::uint64_t stamp_ = 0;
    std::vector<std::uint32_t> joint_counts_;
    std::vector<std::uint32_t> touched_;
};

// Sentinel returned by parent_state_product when prod r_j overflows.
inline constexpr std::uint64_t kSaturatedStates = UINT64_MAX;

// q_i = prod_{j in U} r_j in saturating arithmetic (q_i = 1 for the empty
// set). Saturation can only make Condition 1 fire, which is sound.
std::uint64_t parent_state_product(const Dataset& ds, const VarSet& parents);

// NC(Xi, U) = 0.5 * log2(m) * q_i * (r_i - 1), bits. A saturated q yields
// +infinity, which always triggers Condition 1.
double network_complexity(int m, int r_i, std::uint64_t q);
double network_complexity(int m, int r_i, std::span<const int> parent_arities);

void group_by(const Dataset& ds, const VarSet& parents, GroupIndex& out,
              ScoreWorkspace& ws);
GroupIndex group_by(const Dataset& ds, const VarSet& parents);

// Scores every target of a folded node with a single shared grouping of
// the data on node.parents. Results are in ascending canonical target
// order, deterministically sum-ordered so repeated runs are bit-identical.
std::vector<TargetScore> score_targets(const Dataset& ds, const LatticeNode& node,
                                       ScoreWorkspace& ws);
std::vector<TargetScore> score_targets(const Dataset& ds, const LatticeNode& node);

} // namespace mps

#endif // MPS_SCORING_HPP
