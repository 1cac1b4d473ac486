#include "mps/reference.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "mps/engine.hpp"
#include "mps/scoring.hpp"

namespace mps {

namespace {

struct Candidate {
    VarSet targets_seen; // intersection of proposing predecessors' survivors
    int predecessors = 0;
};

} // namespace

SyncResult synchronized_run(const Dataset& ds, bool pruning, int max_layer) {
    const int n = ds.n();
    const double m = static_cast<double>(ds.m());
    const int cap = (max_layer < 0 || max_layer > n) ? n : max_layer;

    SyncResult res;
    res.lists.assign(static_cast<std::size_t>(n), MpsList{});
    res.layer_nodes.assign(static_cast<std::size_t>(n + 1), 0);

    std::vector<double> empty_score(static_cast<std::size_t>(n));
    std::vector<double> floor_bits(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        floor_bits[static_cast<std::size_t>(v)] = m * ds.full_cond_entropy(v);

    ScoreWorkspace ws;

    // frontier: parent set -> surviving targets after the node was scored
    std::vector<std::pair<VarSet, VarSet>> frontier;

    {
        const LatticeNode root_node = root(n);
        const std::vector<TargetScore> scores = score_targets(ds, root_node, ws);
        VarSet survivors;
        for (const TargetScore& t : scores) {
            empty_score[static_cast<std::size_t>(t.var)] = t.score;
            res.lists[static_cast<std::size_t>(t.var)].entries.push_back(
                MpsEntry{VarSet{}, t.score, false});
            const bool cond1 = t.nc >= t.score;
            const bool cond2 =
                t.score <= floor_bits[static_cast<std::size_t>(t.var)] + t.nc;
            if (!pruning || !(cond1 || cond2)) survivors.add(t.var);
        }
        res.visited.insert(VarSet{});
        res.layer_nodes[0] = 1;
        res.nodes = 1;
        frontier.push_back({VarSet{}, survivors});
    }

    for (int layer = 1; layer <= cap && !frontier.empty(); ++layer) {
        // A parent set is realized only when all |U| predecessors proposed
        // it, and only for targets that survived in every one of them.
        std::unordered_map<VarSet, Candidate, VarSetHash> candidates;
        for (const auto& [parents, survivors] : frontier) {
            for (int k = 0; k < n; ++k) {
                if (parents.contains(k)) continue;
                const VarSet grown = parents.with(k);
                Candidate& c =
                    candidates.try_emplace(grown, Candidate{VarSet::full(n), 0})
                        .first->second;
                c.targets_seen = c.targets_seen & survivors;
                c.predecessors += 1;
            }
        }

        std::vector<DeltaBatch> batches(1);
        std::vector<std::pair<VarSet, VarSet>> next_frontier;
        for (const auto& [parents, cand] : candidates) {
            if (cand.predecessors != layer) continue;
            const VarSet targets = cand.targets_seen - parents;
            if (targets.empty()) continue;

            res.visited.insert(parents);
            res.layer_nodes[static_cast<std::size_t>(layer)] += 1;
            res.nodes += 1;

            const LatticeNode node{targets, parents};
            const std::vector<TargetScore> scores = score_targets(ds, node, ws);
            VarSet survivors;
            for (const TargetScore& t : scores) {
                const double prev = query_d(
                    res.lists[static_cast<std::size_t>(t.var)], node.parents);
                if (t.score < prev)
                    batches[0].push_back(
                        {t.var, MpsEntry{node.parents, t.score, false}});
                const double d = std::min(t.score, prev);
                const bool cond1 =
                    t.nc >= empty_score[static_cast<std::size_t>(t.var)];
                const bool cond2 =
                    d <= floor_bits[static_cast<std::size_t>(t.var)] + t.nc;
                if (!pruning || !(cond1 || cond2)) survivors.add(t.var);
            }
            next_frontier.push_back({parents, survivors});
        }
        merge(res.lists, batches);
        frontier = std::move(next_frontier);
    }

    return res;
}

ExtraWorkReport measure_extra_work(const Dataset& ds, int workers) {
    std::vector<std::pair<LatticeNode, VarSet>> engine_nodes;
    EngineConfig cfg;
    cfg.workers = workers;
    cfg.node_observer = [&engine_nodes](const LatticeNode& node,
                                        const VarSet& survivors) {
        engine_nodes.push_back({node, survivors});
    };
    run(ds, cfg);
    const SyncResult sync = synchronized_run(ds);

    ExtraWorkReport rep;
    rep.engine_nodes = engine_nodes.size();
    rep.sync_nodes = sync.nodes;
    const int n = ds.n();
    std::vector<LatticeNode> children;
    for (const auto& [node, survivors] : engine_nodes) {
        if (sync.visited.count(node.parents)) continue;
        rep.elided_nodes += 1;
        children.clear();
        append_successors(node, survivors, n, children);
        if (!children.empty()) rep.elided_with_successors += 1;
    }
    if (rep.sync_nodes > 0)
        rep.fraction = (static_cast<double>(rep.engine_nodes) -
                        static_cast<double>(rep.sync_nodes)) /
                       static_cast<double>(rep.sync_nodes);
    return rep;
}

} // namespace mps
