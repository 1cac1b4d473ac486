#include "mps/output.hpp"

#include <algorithm>
#include <cstdio>

namespace mps {

namespace {

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out;
}

template <typename Fn>
void for_each_record(const Dataset& ds, const std::vector<MpsList>& lists,
                     Fn&& fn) {
    for (int orig = 0; orig < ds.n(); ++orig) {
        const int v = ds.canonical_index(orig);
        for (const MpsEntry& e : lists[static_cast<std::size_t>(v)].entries)
            fn(v, e);
    }
}

} // namespace

void write_jsonl(std::ostream& os, const Dataset& ds,
                 const std::vector<MpsList>& lists) {
    for_each_record(ds, lists, [&](int v, const MpsEntry& e) {
        os << "{\"variable\":\"" << json_escape(ds.name(v))
           << "\",\"parents\":[";
        bool first = true;
        e.parents.for_each([&](int p) {
            if (!first) os << ',';
            first = false;
            os << '"' << json_escape(ds.name(p)) << '"';
        });
        os << "],\"score\":" << fixed9(e.score) << "}\n";
    });
}

void write_csv(std::ostream& os, const Dataset& ds,
               const std::vector<MpsList>& lists) {
    for_each_record(ds, lists, [&](int v, const MpsEntry& e) {
        os << ds.name(v) << ',';
        bool first = true;
        e.parents.for_each([&](int p) {
            if (!first) os << ';';
            first = false;
            os << ds.name(p);
        });
        os << ',' << fixed9(e.score) << '\n';
    });
}

void write_stats(std::ostream& os, const RunStats& stats,
                 const std::vector<std::pair<std::string, std::string>>& extras) {
    os << "workers=" << stats.workers << '\n';
    os << "nodes_processed=" << stats.nodes_processed << '\n';
    os << "l_max=" << stats.l_max << '\n';
    os << "l_z=" << stats.l_z << '\n';
    os << "z=" << stats.z << '\n';
    os << "z_f=" << stats.z_f << '\n';
    os << "pruned_by_cond1=" << stats.pruned_by_cond1 << '\n';
    os << "pruned_by_cond2=" << stats.pruned_by_cond2 << '\n';
    os << "dfs_switch_layer=" << stats.dfs_switch_layer << '\n';
    os << "peak_frontier_bytes=" << stats.peak_frontier_bytes << '\n';
    char wall[64];
    std::snprintf(wall, sizeof(wall), "%.6f", stats.wall_seconds);
    os << "wall_seconds=" << wall << '\n';
    for (int l = 0; l <= stats.l_max; ++l)
        os << "layer_nodes." << l << '='
           << stats.layer_nodes[static_cast<std::size_t>(l)] << '\n';
    for (int l = 0; l <= stats.l_max; ++l)
        os << "layer_targets." << l << '='
           << stats.layer_targets[static_cast<std::size_t>(l)] << '\n';
    const int est_hi =
        std::min<int>(stats.l_max + 1,
                      static_cast<int>(stats.layer_estimate_bytes.size()) - 1);
    for (int l = 1; l <= est_hi; ++l)
        os << "layer_estimate_bytes." << l << '='
           << stats.layer_estimate_bytes[static_cast<std::size_t>(l)] << '\n';
    for (const auto& [key, value] : extras) os << key << '=' << value << '\n';
}

} // namespace mps
