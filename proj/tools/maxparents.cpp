#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mps/dataset.hpp"
#include "mps/engine.hpp"
#include "mps/oracle.hpp"
#include "mps/output.hpp"
#include "mps/reference.hpp"

namespace {

std::uint64_t default_memory_budget() {
    const long pages = sysconf(_SC_PHYS_PAGES);
    const long page_size = sysconf(_SC_PAGE_SIZE);
    if (pages <= 0 || page_size <= 0) return 1ull << 32;
    const std::uint64_t total =
        static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
    return total / 4 * 3;
}

int fail(const std::string& msg, int code) {
    std::cerr << "maxparents: " << msg << "\n";
    return code;
}

// Exact set equality, scores within 1e-9 bits.
bool matches_oracle(const std::vector<mps::MpsList>& got,
                    const std::vector<mps::MpsList>& want, std::string& why) {
    if (got.size() != want.size()) {
        why = "variable count mismatch";
        return false;
    }
    for (std::size_t v = 0; v < got.size(); ++v) {
        const auto& g = got[v].entries;
        const auto& w = want[v].entries;
        if (g.size() != w.size()) {
            why = "entry count mismatch for variable " + std::to_string(v);
            return false;
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!(g[i].parents == w[i].parents) ||
                std::fabs(g[i].score - w[i].score) > 1e-9) {
                why = "entry " + std::to_string(i) + " mismatch for variable " +
                      std::to_string(v);
                return false;
            }
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Enumerates, for every variable of a discrete dataset, all maximal "
        "parent sets under the MDL score"};

    std::string input_path;
    std::string output_path;
    std::string format = "jsonl";
    std::string arities_path;
    std::string stats_path;
    int workers = 0;
    std::uint64_t memory_budget = default_memory_budget();
    int chunks_per_worker = 4;
    bool no_prune = false;
    int force_dfs_layer = -1;
    int max_layer = -1;
    bool oracle_check = false;

    app.add_option("--input", input_path, "input CSV table")->required();
    app.add_option("--output", output_path, "result file (default stdout)");
    app.add_option("--format", format, "output format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--workers", workers, "worker threads (default hardware count)");
    app.add_option("--memory-budget", memory_budget,
                   "frontier budget in bytes (default 75% of RAM)");
    app.add_option("--chunks-per-worker", chunks_per_worker,
                   "work chunks claimed per worker and layer");
    app.add_option("--arities", arities_path, "arity sidecar (name,arity lines)");
    app.add_option("--stats", stats_path, "write run statistics to this file");
    app.add_flag("--no-prune", no_prune, "disable the score-bound pruning");
    app.add_option("--force-dfs-layer", force_dfs_layer,
                   "switch to DFS at this layer regardless of memory (testing)");
    app.add_option("--max-layer", max_layer, "stop after this layer");
    app.add_flag("--oracle-check", oracle_check,
                 "cross-check the result against the brute-force oracle (n <= 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ifstream in(input_path);
        if (!in) return fail("cannot open input file: " + input_path, 2);

        mps::ArityOverrides overrides;
        const mps::ArityOverrides* overrides_ptr = nullptr;
        if (!arities_path.empty()) {
            std::ifstream sidecar(arities_path);
            if (!sidecar) return fail("cannot open arity sidecar: " + arities_path, 2);
            overrides = mps::load_arity_sidecar(sidecar);
            overrides_ptr = &overrides;
        }

        const mps::Dataset ds = mps::Dataset::load_csv(in, overrides_ptr);
        for (const std::string& w : ds.warnings())
            std::cerr << "maxparents: warning: " << w << "\n";

        if (oracle_check && ds.n() > 16)
            return fail("--oracle-check supports at most 16 variables", 2);

        mps::EngineConfig cfg;
        cfg.workers = workers;
        cfg.memory_budget_bytes = memory_budget;
        cfg.chunks_per_worker = chunks_per_worker;
        cfg.max_layer = max_layer;
        cfg.dfs_force_layer = force_dfs_layer;
        cfg.pruning_enabled = !no_prune;

        const mps::RunResult result = mps::run(ds, cfg);

        std::vector<std::pair<std::string, std::string>> extras;
        if (oracle_check) {
            const std::vector<mps::MpsList> truth = mps::oracle::brute_force(ds);
            std::string why;
            if (!matches_oracle(result.lists, truth, why))
                return fail("oracle check failed: " + why, 2);
            const mps::ExtraWorkReport rep =
                mps::measure_extra_work(ds, result.stats.workers);
            char frac[64];
            std::snprintf(frac, sizeof(frac), "%.6f", rep.fraction);
            extras.push_back({"oracle_check", "ok"});
            extras.push_back({"extra_work_fraction", frac});
            extras.push_back({"elided_nodes", std::to_string(rep.elided_nodes)});
            extras.push_back({"elided_with_successors",
                              std::to_string(rep.elided_with_successors)});
        }

        std::ostringstream rendered;
        if (format == "csv")
            mps::write_csv(rendered, ds, result.lists);
        else
            mps::write_jsonl(rendered, ds, result.lists);

        if (output_path.empty()) {
            std::cout << rendered.str();
            if (!std::cout) return fail("cannot write to stdout", 2);
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out) return fail("cannot open output file: " + output_path, 2);
            out << rendered.str();
            out.flush();
            if (!out) return fail("cannot write output file: " + output_path, 2);
        }

        if (!stats_path.empty()) {
            std::ofstream st(stats_path, std::ios::binary);
            if (!st) return fail("cannot open stats file: " + stats_path, 2);
            mps::write_stats(st, result.stats, extras);
            st.flush();
            if (!st) return fail("cannot write stats file: " + stats_path, 2);
        }
        return 0;
    } catch (const mps::ConfigError& e) {
        return fail(e.what(), 3);
    } catch (const mps::DatasetError& e) {
        return fail(e.what(), 2);
    } catch (const std::exception& e) {
        return fail(e.what(), 2);
    }
}
