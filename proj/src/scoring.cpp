#include "mps/scoring.hpp"

#include <cmath>
#include <limits>

namespace mps {

std::uint64_t parent_state_product(const Dataset& ds, const VarSet& parents) {
    std::uint64_t q = 1;
    bool saturated = false;
    parents.for_each([&](int j) {
        std::uint64_t r = static_cast<std::uint64_t>(ds.arity(j));
        if (saturated || (r != 0 && q > kSaturatedStates / r)) {
            saturated = true;
            return;
        }
        q *= r;
    });
    return saturated ? kSaturatedStates : q;
}

double network_complexity(int m, int r_i, std::uint64_t q) {
    if (r_i <= 1) return 0.0;
    if (q == kSaturatedStates) return std::numeric_limits<double>::infinity();
    return 0.5 * std::log2(static_cast<double>(m)) * static_cast<double>(q) *
           static_cast<double>(r_i - 1);
}

double network_complexity(int m, int r_i, std::span<const int> parent_arities) {
    std::uint64_t q = 1;
    for (int r : parent_arities) {
        std::uint64_t rr = static_cast<std::uint64_t>(r);
        if (rr != 0 && q > kSaturatedStates / rr) {
            q = kSaturatedStates;
            break;
        }
        q *= rr;
    }
    return network_complexity(m, r_i, q);
}

void group_by(const Dataset& ds, const VarSet& parents, GroupIndex& out,
              ScoreWorkspace& ws) {
    const int m = ds.m();
    out.group_of_row.assign(m, 0);
    std::uint32_t group_count = 1;
    parents.for_each([&](int j) {
        if (group_count == static_cast<std::uint32_t>(m)) return; // all singletons
        const auto& col = ds.column(j);
        const std::uint32_t r = static_cast<std::uint32_t>(ds.arity(j));
        const std::size_t cells = static_cast<std::size_t>(group_count) * r;
        if (ws.remap_stamp_.size() < cells) {
            ws.remap_stamp_.resize(cells, 0);
            ws.remap_.resize(cells);
        }
        const std::uint64_t stamp = ++ws.stamp_;
        std::uint32_t next = 0;
        for (int row = 0; row < m; ++row) {
            std::size_t cell = static_cast<std::size_t>(out.group_of_row[row]) * r + col[row];
            if (ws.remap_stamp_[cell] != stamp) {
                ws.remap_stamp_[cell] = stamp;
                ws.remap_[cell] = next++;
            }
            out.group_of_row[row] = ws.remap_[cell];
        }
        group_count = next;
    });
    out.group_count = group_count;
    out.group_sizes.assign(group_count, 0);
    for (int row = 0; row < m; ++row) out.group_sizes[out.group_of_row[row]]++;
}

GroupIndex group_by(const Dataset& ds, const VarSet& parents) {
    ScoreWorkspace ws;
    GroupIndex gi;
    group_by(ds, parents, gi, ws);
    return gi;
}

std::vector<TargetScore> score_targets(const Dataset& ds, const LatticeNode& node,
                                       ScoreWorkspace& ws) {
    const int m = ds.m();
    GroupIndex gi;
    group_by(ds, node.parents, gi, ws);

    // Sum_u N_u*log2(N_u), shared by every target of the node.
    double parent_bits = 0.0;
    for (std::uint32_t nu : gi.group_sizes) parent_bits += ds.nlog2n(nu);

    const std::uint64_t q = parent_state_product(ds, node.parents);

    std::vector<TargetScore> out;
    out.reserve(node.targets.count());
    node.targets.for_each([&](int v) {
        const auto& col = ds.column(v);
        const std::uint32_t r = static_cast<std::uint32_t>(ds.arity(v));
        const std::size_t cells = static_cast<std::size_t>(gi.group_count) * r;
        if (ws.joint_counts_.size() < cells) ws.joint_counts_.resize(cells, 0);
        ws.touched_.clear();
        for (int row = 0; row < m; ++row) {
            std::size_t cell = static_cast<std::size_t>(gi.group_of_row[row]) * r + col[row];
            if (ws.joint_counts_[cell]++ == 0)
                ws.touched_.push_back(static_cast<std::uint32_t>(cell));
        }
        // m*H(Xi|U) = sum_u N_u*log2(N_u) - sum_{u,x} N_ux*log2(N_ux);
        // nonzero cells are visited in first-touch order, which is a pure
        // function of the node, so the sum is bit-reproducible.
        double joint_bits = 0.0;
        for (std::uint32_t cell : ws.touched_) {
            joint_bits += ds.nlog2n(ws.joint_counts_[cell]);
            ws.joint_counts_[cell] = 0;
        }
        double m_h = parent_bits - joint_bits;
        if (m_h < 0.0) m_h = 0.0;
        double nc = network_complexity(m, static_cast<int>(r), q);
        out.push_back(TargetScore{v, m_h + nc, nc, m_h / m});
    });
    return out;
}

std::vector<TargetScore> score_targets(const Dataset& ds, const LatticeNode& node) {
    ScoreWorkspace ws;
    return score_targets(ds, node, ws);
}

} // namespace mps
