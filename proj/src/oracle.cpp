#include "mps/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mps::oracle {
namespace {

VarSet from_mask(std::uint32_t mask) {
    VarSet s;
    for (int k = 0; mask; ++k, mask >>= 1)
        if (mask & 1) s.add(k);
    return s;
}

std::uint32_t to_mask(const VarSet& s) {
    std::uint32_t mask = 0;
    s.for_each([&](int k) { mask |= 1u << k; });
    return mask;
}

void check_size(int n) {
    if (n > kMaxVars)
        throw std::invalid_argument("oracle limited to " + std::to_string(kMaxVars) +
                                    " variables, got " + std::to_string(n));
}

} // namespace

double single_target_score(const Dataset& ds, int var, const VarSet& parents) {
    const int m = ds.m();
    // Joint and marginal counts over the parent projection, keyed by the
    // raw state tuple (a map, not the engine's refinement grouping).
    std::map<std::vector<std::uint32_t>, std::map<std::uint32_t, int>> counts;
    std::vector<std::uint32_t> key;
    for (int row = 0; row < m; ++row) {
        key.clear();
        parents.for_each([&](int j) { key.push_back(ds.column(j)[row]); });
        counts[key][ds.column(var)[row]]++;
    }
    double h = 0.0;
    for (const auto& [u, per_state] : counts) {
        int nu = 0;
        for (const auto& [x, c] : per_state) nu += c;
        for (const auto& [x, c] : per_state) {
            double p = static_cast<double>(c) / m;
            h -= p * std::log2(static_cast<double>(c) / nu);
        }
    }
    double q = 1.0;
    parents.for_each([&](int j) { q *= static_cast<double>(ds.arity(j)); });
    double nc = 0.5 * std::log2(static_cast<double>(m)) * q * (ds.arity(var) - 1);
    return m * h + nc;
}

OracleTables build_tables(const Dataset& ds) {
    const int n = ds.n();
    check_size(n);
    OracleTables t;
    t.n = n;
    const std::uint32_t space = 1u << n;
    t.s.assign(n, {});
    t.d.assign(n, {});
    for (int i = 0; i < n; ++i) {
        t.s[i].assign(space, 0.0);
        t.d[i].assign(space, 0.0);
        const std::uint32_t self = 1u << i;
        for (std::uint32_t mask = 0; mask < space; ++mask) {
            if (mask & self) continue;
            double s = single_target_score(ds, i, from_mask(mask));
            double d = s;
            // Ascending mask order: every one-element-removed subset has a
            // smaller mask, so its d is already final.
            for (std::uint32_t rest = mask; rest;) {
                std::uint32_t bit = rest & (~rest + 1);
                rest ^= bit;
                d = std::min(d, t.d[i][mask ^ bit]);
            }
            t.s[i][mask] = s;
            t.d[i][mask] = d;
        }
    }
    return t;
}

double optimal_score(const OracleTables& tables, int var, const VarSet& u) {
    return tables.d[var][to_mask(u)];
}

std::vector<MpsList> brute_force(const OracleTables& t) {
    const int n = t.n;
    std::vector<MpsList> lists(n);
    for (int i = 0; i < n; ++i) {
        const std::uint32_t self = 1u << i;
        const std::uint32_t space = 1u << n;
        for (std::uint32_t mask = 0; mask < space; ++mask) {
            if (mask & self) continue;
            double s = t.s[i][mask];
            // Maximal: strictly better than the optimal score of every
            // strict subset; ties lose, so smaller sets win on equal score.
            bool maximal = true;
            for (std::uint32_t rest = mask; rest;) {
                std::uint32_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (t.d[i][mask ^ bit] <= s) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) lists[i].entries.push_back({from_mask(mask), s, false});
        }
        std::sort(lists[i].entries.begin(), lists[i].entries.end(), entry_less);
    }
    return lists;
}

std::vector<MpsList> brute_force(const Dataset& ds) {
    return brute_force(build_tables(ds));
}

} // namespace mps::oracle
