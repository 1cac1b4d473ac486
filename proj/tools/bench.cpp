#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mps/engine.hpp"
#include "mps/reference.hpp"
#include "mps/synthetic.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::uint64_t total_entries(const std::vector<mps::MpsList>& lists) {
    std::uint64_t z = 0;
    for (const auto& l : lists) z += l.entries.size();
    return z;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Times the serial synchronized baseline against the "
                 "parallel engine on one synthetic workload"};

    mps::SyntheticSpec spec;
    spec.n = 16;
    spec.m = 500;
    spec.seed = 7;
    int max_layer = -1;
    int force_dfs_layer = -1;
    std::vector<int> worker_counts{1, 2, 4, 8};

    app.add_option("--n", spec.n, "variables");
    app.add_option("--m", spec.m, "rows");
    app.add_option("--seed", spec.seed, "generator seed");
    app.add_option("--max-parents", spec.max_parents, "true parents per variable");
    app.add_option("--max-layer", max_layer, "layer cap for both runs");
    app.add_option("--force-dfs-layer", force_dfs_layer,
                   "switch the engine to depth-first at this layer");
    app.add_option("--workers", worker_counts, "engine worker counts to time");

    CLI11_PARSE(app, argc, argv);

    std::cout << "generating n=" << spec.n << " m=" << spec.m
              << " seed=" << spec.seed << "\n";
    const mps::Dataset ds = mps::make_synthetic(spec);

    double ref_seconds = 0.0;
    {
        const auto t0 = std::chrono::steady_clock::now();
        const mps::SyncResult ref = mps::synchronized_run(ds, true, max_layer);
        ref_seconds = seconds_since(t0);
        std::printf("serial reference   %8.3fs  nodes=%llu  z=%llu\n",
                    ref_seconds,
                    static_cast<unsigned long long>(ref.nodes),
                    static_cast<unsigned long long>(total_entries(ref.lists)));
    }

    for (int w : worker_counts) {
        mps::EngineConfig cfg;
        cfg.workers = w;
        cfg.max_layer = max_layer;
        cfg.dfs_force_layer = force_dfs_layer;
        const auto t0 = std::chrono::steady_clock::now();
        const mps::RunResult res = mps::run(ds, cfg);
        const double secs = seconds_since(t0);
        std::printf(
            "engine workers=%-2d  %8.3fs  nodes=%llu  z=%llu  vs-ref=%.2fx\n",
            w, secs, static_cast<unsigned long long>(res.stats.nodes_processed),
            static_cast<unsigned long long>(res.stats.z),
            secs > 0.0 ? ref_seconds / secs : 0.0);
    }
    return 0;
}
