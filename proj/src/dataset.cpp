#include "mps/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <unordered_map>

#include "mps/varset.hpp"

namespace mps {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

// Groups rows by the projection onto the original columns selected by
// `use`, via iterative refinement. Returns the per-row group id and the
// group count; group ids are assigned in first-appearance order.
std::uint32_t refine_groups(const std::vector<std::vector<std::uint32_t>>& cols,
                            const std::vector<int>& arities,
                            const std::vector<int>& use, int m,
                            std::vector<std::uint32_t>& group_of_row) {
    group_of_row.assign(m, 0);
    std::uint32_t group_count = 1;
    std::vector<std::uint32_t> remap;
    for (int j : use) {
        const auto& col = cols[j];
        std::uint32_t r = static_cast<std::uint32_t>(arities[j]);
        remap.assign(static_cast<std::size_t>(group_count) * r, UINT32_MAX);
        std::uint32_t next = 0;
        for (int row = 0; row < m; ++row) {
            std::size_t cell = static_cast<std::size_t>(group_of_row[row]) * r + col[row];
            if (remap[cell] == UINT32_MAX) remap[cell] = next++;
            group_of_row[row] = remap[cell];
        }
        group_count = next;
        if (group_count == static_cast<std::uint32_t>(m)) break; // all singletons
    }
    return group_count;
}

// H(X_target | grouping) in bits from counts; 0*log0 = 0.
double cond_entropy_from_groups(const std::vector<std::uint32_t>& group_of_row,
                                std::uint32_t group_count,
                                const std::vector<std::uint32_t>& target_col,
                                std::uint32_t target_arity, int m) {
    std::vector<std::uint32_t> group_sizes(group_count, 0);
    for (int row = 0; row < m; ++row) group_sizes[group_of_row[row]]++;
    std::vector<std::uint32_t> joint(static_cast<std::size_t>(group_count) * target_arity, 0);
    for (int row = 0; row < m; ++row)
        joint[static_cast<std::size_t>(group_of_row[row]) * target_arity + target_col[row]]++;
    double bits = 0.0;
    for (std::uint32_t g = 0; g < group_count; ++g) {
        double nu = group_sizes[g];
        for (std::uint32_t x = 0; x < target_arity; ++x) {
            std::uint32_t c = joint[static_cast<std::size_t>(g) * target_arity + x];
            if (c) bits -= c * std::log2(c / nu);
        }
    }
    double h = bits / m;
    return h < 0.0 ? 0.0 : h;
}

} // namespace

std::vector<int> canonical_order(const std::vector<int>& arities,
                                 const std::vector<double>& cond_entropies) {
    std::vector<int> order(arities.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (arities[a] != arities[b]) return arities[a] > arities[b];
        if (cond_entropies[a] != cond_entropies[b])
            return cond_entropies[a] < cond_entropies[b];
        return a < b;
    });
    return order;
}

Dataset Dataset::from_codes(std::vector<std::string> names,
                            std::vector<std::vector<std::uint32_t>> columns,
                            std::vector<int> declared_arities) {
    const int n = static_cast<int>(columns.size());
    if (n == 0) throw DatasetError("empty table: no variables");
    if (n > VarSet::kCapacity)
        throw DatasetError("too many variables for this build: " + std::to_string(n) +
                           " > " + std::to_string(VarSet::kCapacity) +
                           " (rebuild with a larger MPS_VARSET_WORDS)");
    const int m = static_cast<int>(columns[0].size());
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != m)
            throw DatasetError("ragged columns");
    if (m < 2) throw DatasetError("need at least 2 observations, got " + std::to_string(m));

    std::vector<int> arities(n);
    Dataset ds;
    for (int i = 0; i < n; ++i) {
        std::uint32_t max_code = 0;
        for (auto c : columns[i]) max_code = std::max(max_code, c);
        int observed = static_cast<int>(max_code) + 1;
        int declared = i < static_cast<int>(declared_arities.size()) ? declared_arities[i] : 0;
        if (declared != 0 && declared < observed)
            throw DatasetError("declared arity " + std::to_string(declared) + " for '" +
                               names[i] + "' is smaller than the observed distinct count " +
                               std::to_string(observed));
        arities[i] = declared != 0 ? declared : observed;
        if (arities[i] == 1)
            ds.warnings_.push_back("variable '" + names[i] +
                                   "' is constant (arity 1); it can never gain parents");
    }

    // Full conditional entropies, computed on original indices (the values
    // are index-invariant, feeding both the ordering and Condition 2).
    std::vector<double> entropies(n);
    std::vector<std::uint32_t> group_of_row;
    std::vector<int> others;
    for (int i = 0; i < n; ++i) {
        others.clear();
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        std::uint32_t groups = refine_groups(columns, arities, others, m, group_of_row);
        entropies[i] = cond_entropy_from_groups(group_of_row, groups, columns[i],
                                                static_cast<std::uint32_t>(arities[i]), m);
    }

    ds.m_ = m;
    ds.order_ = canonical_order(arities, entropies);
    ds.inverse_order_.assign(n, 0);
    for (int k = 0; k < n; ++k) ds.inverse_order_[ds.order_[k]] = k;
    ds.names_ = std::move(names);
    ds.columns_.resize(n);
    ds.arities_.resize(n);
    ds.full_cond_entropy_.resize(n);
    for (int k = 0; k < n; ++k) {
        int orig = ds.order_[k];
        ds.columns_[k] = std::move(columns[orig]);
        ds.arities_[k] = arities[orig];
        ds.full_cond_entropy_[k] = entropies[orig];
    }
    ds.nlog2n_.resize(m + 1);
    ds.nlog2n_[0] = 0.0;
    for (int k = 1; k <= m; ++k) ds.nlog2n_[k] = k * std::log2(static_cast<double>(k));
    return ds;
}

Dataset Dataset::load_csv(std::istream& in, const ArityOverrides* overrides) {
    std::string line;
    if (!std::getline(in, line)) throw DatasetError("empty table: no header row");
    strip_cr(line);
    std::vector<std::string> names = split_csv_line(line);
    const int n = static_cast<int>(names.size());
    for (int i = 0; i < n; ++i) {
        if (names[i].empty()) throw DatasetError("empty variable name in header");
        for (int j = 0; j < i; ++j)
            if (names[j] == names[i])
                throw DatasetError("duplicate variable name '" + names[i] +
                                   "' in header");
    }

    std::vector<std::vector<std::uint32_t>> columns(n);
    std::vector<std::unordered_map<std::string, std::uint32_t>> codes(n);
    int m = 0;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::vector<std::string> fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != n)
            throw DatasetError("ragged row " + std::to_string(m + 2) + ": expected " +
                               std::to_string(n) + " fields, got " +
                               std::to_string(fields.size()));
        for (int i = 0; i < n; ++i) {
            if (fields[i].empty())
                throw DatasetError("missing cell at row " + std::to_string(m + 2) +
                                   ", variable '" + names[i] + "'");
            auto [it, inserted] =
                codes[i].emplace(fields[i], static_cast<std::uint32_t>(codes[i].size()));
            columns[i].push_back(it->second);
        }
        ++m;
    }
    if (m == 0) throw DatasetError("empty table: no data rows");

    std::vector<int> declared(n, 0);
    if (overrides) {
        for (const auto& [name, arity] : overrides->entries) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw DatasetError("arity sidecar names unknown variable '" + name + "'");
            int idx = static_cast<int>(it - names.begin());
            if (declared[idx] != 0)
                throw DatasetError("duplicate arity declaration for '" + name + "'");
            if (arity < 1)
                throw DatasetError("declared arity for '" + name + "' must be >= 1");
            declared[idx] = arity;
        }
    }
    return from_codes(std::move(names), std::move(columns), std::move(declared));
}

ArityOverrides load_arity_sidecar(std::istream& in) {
    ArityOverrides out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        auto pos = line.rfind(',');
        if (pos == std::string::npos || pos == 0)
            throw DatasetError("arity sidecar line " + std::to_string(lineno) +
                               ": expected 'name,arity'");
        std::string name = line.substr(0, pos);
        int arity = 0;
        try {
            arity = std::stoi(line.substr(pos + 1));
        } catch (const std::exception&) {
            throw DatasetError("arity sidecar line " + std::to_string(lineno) +
                               ": bad arity value");
        }
        if (arity < 1)
            throw DatasetError("arity sidecar line " + std::to_string(lineno) +
                               ": declared arity for '" + name + "' must be >= 1");
        for (const auto& [seen, _] : out.entries)
            if (seen == name)
                throw DatasetError("arity sidecar line " + std::to_string(lineno) +
                                   ": duplicate declaration for '" + name + "'");
        out.entries.emplace_back(std::move(name), arity);
    }
    return out;
}

double full_conditional_entropy(const Dataset& ds, int k) {
    const int n = ds.n();
    const int m = ds.m();
    std::vector<std::vector<std::uint32_t>> cols;
    std::vector<int> arities;
    std::vector<int> use;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) {
        cols.push_back(ds.column(j));
        arities.push_back(ds.arity(j));
        if (j != k) use.push_back(j);
    }
    std::vector<std::uint32_t> group_of_row;
    std::uint32_t groups = refine_groups(cols, arities, use, m, group_of_row);
    return cond_entropy_from_groups(group_of_row, groups, cols[k],
                                    static_cast<std::uint32_t>(ds.arity(k)), m);
}

} // namespace mps
