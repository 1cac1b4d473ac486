#include "mps/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <utility>

#include "mps/scoring.hpp"

namespace mps {

namespace {

// Read-only state shared by all workers within one layer.
struct LayerView {
    const Dataset* ds = nullptr;
    const std::vector<MpsList>* snapshot = nullptr;
    const std::vector<double>* empty_score = nullptr; // s(Xi, {})
    const std::vector<double>* floor_bits = nullptr;  // m * H(Xi | all others)
    bool pruning = true;
    const std::function<void(const LatticeNode&, const VarSet&)>* observer = nullptr;
};

// Task-local view of entries produced deeper in one DFS subtree. They are
// not visible to sibling tasks; the barrier merge plus flag verification
// reconciles the overlap afterwards.
class Overlay {
public:
    explicit Overlay(int n) : per_var_(static_cast<std::size_t>(n)) {}

    void clear() {
        for (int v : touched_) per_var_[static_cast<std::size_t>(v)].clear();
        touched_.clear();
    }

    void add(int var, const VarSet& parents, double score) {
        auto& vec = per_var_[static_cast<std::size_t>(var)];
        if (vec.empty()) touched_.push_back(var);
        vec.push_back({parents, score});
    }

    double best_subset(int var, const VarSet& parents) const {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : per_var_[static_cast<std::size_t>(var)])
            if (e.first.subset_of(parents)) best = std::min(best, e.second);
        return best;
    }

private:
    std::vector<std::vector<std::pair<VarSet, double>>> per_var_;
    std::vector<int> touched_;
};

struct NodeCounters {
    std::uint64_t cond1 = 0;
    std::uint64_t cond2 = 0;
    std::uint64_t targets = 0;
};

// Scores one folded node for all its targets, appends new maximal-so-far
// entries to `out`, and returns the targets that survive pruning. With an
// overlay the entries are flagged: they were accepted against partial
// information and must pass final verification.
VarSet process_node(const LatticeNode& node, const LayerView& view,
                    ScoreWorkspace& ws, const Overlay* overlay,
                    DeltaBatch& out, NodeCounters& counters) {
    const std::vector<TargetScore> scores = score_targets(*view.ds, node, ws);
    VarSet survivors;
    for (const TargetScore& t : scores) {
        ++counters.targets;
        double prev = query_d((*view.snapshot)[static_cast<std::size_t>(t.var)],
                              node.parents);
        if (overlay) prev = std::min(prev, overlay->best_subset(t.var, node.parents));
        if (t.score < prev)
            out.push_back({t.var, MpsEntry{node.parents, t.score, overlay != nullptr}});
        const double d = std::min(t.score, prev);
        const bool cond1 =
            t.nc >= (*view.empty_score)[static_cast<std::size_t>(t.var)];
        const bool cond2 =
            d <= (*view.floor_bits)[static_cast<std::size_t>(t.var)] + t.nc;
        if (cond1)
            ++counters.cond1;
        else if (cond2)
            ++counters.cond2;
        if (!view.pruning || !(cond1 || cond2)) survivors.add(t.var);
    }
    return survivors;
}

void notify_observer(const LayerView& view, const LatticeNode& node,
                     const VarSet& survivors) {
    if (!view.observer || !*view.observer) return;
#pragma omp critical(mps_engine_observer)
    (*view.observer)(node, survivors);
}

struct ChunkResult {
    DeltaBatch deltas;
    std::vector<LatticeNode> successors;
    NodeCounters counters;
    // DFS only: nodes visited per depth below the switch layer.
    std::vector<std::uint64_t> depth_nodes;
    std::vector<std::uint64_t> depth_targets;
};

// One BFS chunk: a contiguous frontier slice claimed through the shared
// counter. Successor generation stops at max_layer.
void run_bfs_chunk(std::span<const LatticeNode> slice, int layer,
                   const LayerView& view, ScoreWorkspace& ws, int n,
                   int max_layer, ChunkResult& res) {
    for (const LatticeNode& node : slice) {
        VarSet survivors = process_node(node, view, ws, nullptr, res.deltas,
                                        res.counters);
        notify_observer(view, node, survivors);
        if (layer >= max_layer || survivors.empty()) continue;
        append_successors(node, survivors, n, res.successors);
    }
}

// One DFS task: exhausts the subtree rooted at a single frontier node with
// an explicit stack, keeping entries task-local in the overlay.
void run_dfs_task(const LatticeNode& root, int layer, const LayerView& view,
                  ScoreWorkspace& ws, Overlay& overlay, int n, int max_layer,
                  ChunkResult& res) {
    overlay.clear();
    res.depth_nodes.assign(static_cast<std::size_t>(n + 1), 0);
    res.depth_targets.assign(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::pair<LatticeNode, int>> stack;
    stack.push_back({root, layer});
    std::vector<LatticeNode> children;
    while (!stack.empty()) {
        auto [node, depth] = stack.back();
        stack.pop_back();
        const std::size_t mark = res.deltas.size();
        VarSet survivors = process_node(node, view, ws, &overlay, res.deltas,
                                        res.counters);
        for (std::size_t i = mark; i < res.deltas.size(); ++i)
            overlay.add(res.deltas[i].first, res.deltas[i].second.parents,
                        res.deltas[i].second.score);
        notify_observer(view, node, survivors);
        res.depth_nodes[static_cast<std::size_t>(depth)] += 1;
        res.depth_targets[static_cast<std::size_t>(depth)] += node.targets.count();
        if (depth >= max_layer || survivors.empty()) continue;
        children.clear();
        append_successors(node, survivors, n, children);
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back({*it, depth + 1});
    }
}

} // namespace

std::uint64_t worst_case_successor_bytes(std::span<const LatticeNode> frontier,
                                         int n) {
    std::uint64_t slots = 0;
    for (const LatticeNode& node : frontier)
        slots += static_cast<std::uint64_t>(successor_slots(node, n));
    return slots * kBytesPerNode;
}

RunResult run(const Dataset& ds, const EngineConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = ds.n();

    int workers = cfg.workers;
    if (workers <= 0) workers = omp_get_max_threads();
    if (workers < 1) workers = 1;
    if (cfg.chunks_per_worker < 1)
        throw ConfigError("chunks-per-worker must be at least 1");
    if (cfg.dfs_force_layer == 0)
        throw ConfigError("cannot force DFS at layer 0; the root is always expanded in BFS mode");
    const int max_layer = (cfg.max_layer < 0 || cfg.max_layer > n)
                              ? n
                              : cfg.max_layer;

    omp_set_dynamic(0);

    RunResult result;
    result.lists.assign(static_cast<std::size_t>(n), MpsList{});
    RunStats& stats = result.stats;
    stats.workers = workers;
    stats.layer_nodes.assign(static_cast<std::size_t>(n + 1), 0);
    stats.layer_targets.assign(static_cast<std::size_t>(n + 1), 0);
    stats.layer_estimate_bytes.assign(static_cast<std::size_t>(n + 1), 0);

    // Bootstrap: the root batches every variable, so its scores double as
    // the s(Xi, {}) cache for Condition 1. The per-variable floor for
    // Condition 2 comes straight from the dataset.
    std::vector<double> empty_score(static_cast<std::size_t>(n));
    std::vector<double> floor_bits(static_cast<std::size_t>(n));
    const double m = static_cast<double>(ds.m());
    for (int v = 0; v < n; ++v)
        floor_bits[static_cast<std::size_t>(v)] = m * ds.full_cond_entropy(v);

    LayerView view;
    view.ds = &ds;
    view.snapshot = &result.lists;
    view.empty_score = &empty_score;
    view.floor_bits = &floor_bits;
    view.pruning = cfg.pruning_enabled;
    view.observer = &cfg.node_observer;

    const LatticeNode root_node = root(n);
    ScoreWorkspace boot_ws;
    const std::vector<TargetScore> root_scores =
        score_targets(ds, root_node, boot_ws);
    for (const TargetScore& t : root_scores)
        empty_score[static_cast<std::size_t>(t.var)] = t.score;

    VarSet root_survivors;
    for (const TargetScore& t : root_scores) {
        result.lists[static_cast<std::size_t>(t.var)].entries.push_back(
            MpsEntry{VarSet{}, t.score, false});
        const bool cond1 = t.nc >= t.score;
        const bool cond2 = t.score <= floor_bits[static_cast<std::size_t>(t.var)] + t.nc;
        if (cond1)
            ++stats.pruned_by_cond1;
        else if (cond2)
            ++stats.pruned_by_cond2;
        if (!cfg.pruning_enabled || !(cond1 || cond2)) root_survivors.add(t.var);
    }
    notify_observer(view, root_node, root_survivors);
    stats.layer_nodes[0] = 1;
    stats.layer_targets[0] = static_cast<std::uint64_t>(n);

    std::vector<LatticeNode> frontier;
    if (max_layer >= 1 && !root_survivors.empty()) {
        const std::uint64_t root_est =
            static_cast<std::uint64_t>(n) * kBytesPerNode;
        stats.layer_estimate_bytes[1] = root_est;
        if (root_est > cfg.memory_budget_bytes)
            throw ConfigError(
                "memory budget of " + std::to_string(cfg.memory_budget_bytes) +
                " bytes cannot hold the layer-1 frontier (" +
                std::to_string(root_est) + " bytes needed)");
        append_successors(root_node, root_survivors, n, frontier);
    }

    std::vector<ScoreWorkspace> workspaces(static_cast<std::size_t>(workers));
    std::vector<Overlay> overlays;
    overlays.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) overlays.emplace_back(n);

    int layer = 1;
    bool dfs_taken = false;
    while (!frontier.empty()) {
        stats.peak_frontier_bytes =
            std::max(stats.peak_frontier_bytes,
                     static_cast<std::uint64_t>(frontier.size()) * kBytesPerNode);

        bool dfs = false;
        if (!dfs_taken && layer == cfg.dfs_force_layer) dfs = true;
        if (!dfs && layer < max_layer) {
            const std::uint64_t est = worst_case_successor_bytes(frontier, n);
            if (static_cast<std::size_t>(layer + 1) < stats.layer_estimate_bytes.size())
                stats.layer_estimate_bytes[static_cast<std::size_t>(layer + 1)] = est;
            if (est > cfg.memory_budget_bytes) dfs = true;
        }

        const int eff_workers = (!dfs && layer <= 1) ? 1 : workers;
        const std::uint64_t task_count =
            dfs ? static_cast<std::uint64_t>(frontier.size())
                : std::min<std::uint64_t>(
                      frontier.size(),
                      static_cast<std::uint64_t>(eff_workers) *
                          static_cast<std::uint64_t>(cfg.chunks_per_worker));
        std::vector<ChunkResult> results(static_cast<std::size_t>(task_count));
        std::atomic<std::uint64_t> next_task{0};

        if (dfs) {
            stats.dfs_switch_layer = layer;
            dfs_taken = true;
#pragma omp parallel num_threads(workers)
            {
                const int w = omp_get_thread_num();
                for (;;) {
                    const std::uint64_t i =
                        next_task.fetch_add(1, std::memory_order_relaxed);
                    if (i >= task_count) break;
                    run_dfs_task(frontier[static_cast<std::size_t>(i)], layer,
                                 view, workspaces[static_cast<std::size_t>(w)],
                                 overlays[static_cast<std::size_t>(w)], n,
                                 max_layer,
                                 results[static_cast<std::size_t>(i)]);
                }
            }
        } else {
            const std::uint64_t total = frontier.size();
            const std::uint64_t base = total / task_count;
            const std::uint64_t rem = total % task_count;
#pragma omp parallel num_threads(eff_workers)
            {
                const int w = omp_get_thread_num();
                for (;;) {
                    const std::uint64_t i =
                        next_task.fetch_add(1, std::memory_order_relaxed);
                    if (i >= task_count) break;
                    const std::uint64_t begin =
                        i * base + std::min<std::uint64_t>(i, rem);
                    const std::uint64_t len = base + (i < rem ? 1 : 0);
                    run_bfs_chunk({frontier.data() + begin,
                                   static_cast<std::size_t>(len)},
                                  layer, view,
                                  workspaces[static_cast<std::size_t>(w)], n,
                                  max_layer,
                                  results[static_cast<std::size_t>(i)]);
                }
            }
        }

        // Barrier: fold worker output back into the shared state on one
        // thread. Chunk order keeps the next frontier deterministic.
        std::vector<DeltaBatch> batches;
        batches.reserve(results.size());
        std::vector<LatticeNode> next_frontier;
        for (ChunkResult& r : results) {
            stats.pruned_by_cond1 += r.counters.cond1;
            stats.pruned_by_cond2 += r.counters.cond2;
            if (dfs) {
                for (std::size_t d = 0; d < r.depth_nodes.size(); ++d) {
                    stats.layer_nodes[d] += r.depth_nodes[d];
                    stats.layer_targets[d] += r.depth_targets[d];
                }
            }
            batches.push_back(std::move(r.deltas));
            next_frontier.insert(next_frontier.end(), r.successors.begin(),
                                 r.successors.end());
        }
        if (!dfs) {
            stats.layer_nodes[static_cast<std::size_t>(layer)] = frontier.size();
            std::uint64_t tg = 0;
            for (const ChunkResult& r : results) tg += r.counters.targets;
            stats.layer_targets[static_cast<std::size_t>(layer)] = tg;
        }
        merge(result.lists, batches);

        frontier = std::move(next_frontier);
        ++layer;
    }

    for (MpsList& list : result.lists) stats.z_f += verify_flagged(list);

    for (std::size_t l = stats.layer_nodes.size(); l-- > 0;) {
        if (stats.layer_nodes[l] > 0) {
            stats.l_max = static_cast<int>(l);
            break;
        }
    }
    for (const MpsList& list : result.lists) {
        stats.z += static_cast<std::uint64_t>(list.entries.size());
        for (const MpsEntry& e : list.entries)
            stats.l_z = std::max(stats.l_z, e.parents.count());
    }
    for (std::uint64_t c : stats.layer_nodes) stats.nodes_processed += c;

    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

} // namespace mps
