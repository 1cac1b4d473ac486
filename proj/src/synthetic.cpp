#include "mps/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace mps {

Dataset make_synthetic(const SyntheticSpec& spec) {
    if (spec.n < 1 || spec.m < 2 || spec.min_arity < 2 ||
        spec.max_arity < spec.min_arity || spec.max_parents < 0)
        throw DatasetError("invalid synthetic spec");

    std::mt19937_64 rng(spec.seed);
    const int n = spec.n;

    std::vector<int> arities(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> arity_dist(spec.min_arity, spec.max_arity);
    for (int i = 0; i < n; ++i) arities[static_cast<std::size_t>(i)] = arity_dist(rng);

    std::vector<std::vector<int>> parents(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int cap = std::min(i, spec.max_parents);
        std::uniform_int_distribution<int> count_dist(0, cap);
        const int c = count_dist(rng);
        std::vector<int> pool(static_cast<std::size_t>(i));
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(static_cast<std::size_t>(c));
        std::sort(pool.begin(), pool.end());
        parents[static_cast<std::size_t>(i)] = std::move(pool);
    }

    // One Dirichlet-drawn distribution per joint parent configuration,
    // flattened row-major over the parents' mixed-radix index.
    std::vector<std::vector<double>> cpt(static_cast<std::size_t>(n));
    std::gamma_distribution<double> gamma(spec.concentration, 1.0);
    for (int i = 0; i < n; ++i) {
        std::size_t q = 1;
        for (int p : parents[static_cast<std::size_t>(i)])
            q *= static_cast<std::size_t>(arities[static_cast<std::size_t>(p)]);
        const std::size_t r = static_cast<std::size_t>(arities[static_cast<std::size_t>(i)]);
        auto& table = cpt[static_cast<std::size_t>(i)];
        table.resize(q * r);
        for (std::size_t row = 0; row < q; ++row) {
            double total = 0.0;
            for (std::size_t k = 0; k < r; ++k) {
                double g = gamma(rng);
                if (g <= 0.0) g = 1e-12;
                table[row * r + k] = g;
                total += g;
            }
            for (std::size_t k = 0; k < r; ++k) table[row * r + k] /= total;
        }
    }

    std::vector<std::vector<std::uint32_t>> columns(
        static_cast<std::size_t>(n),
        std::vector<std::uint32_t>(static_cast<std::size_t>(spec.m)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int row = 0; row < spec.m; ++row) {
        for (int i = 0; i < n; ++i) {
            std::size_t idx = 0;
            for (int p : parents[static_cast<std::size_t>(i)]) {
                idx = idx * static_cast<std::size_t>(
                                arities[static_cast<std::size_t>(p)]) +
                      columns[static_cast<std::size_t>(p)]
                             [static_cast<std::size_t>(row)];
            }
            const std::size_t r =
                static_cast<std::size_t>(arities[static_cast<std::size_t>(i)]);
            const double* dist = cpt[static_cast<std::size_t>(i)].data() + idx * r;
            const double u = unit(rng);
            double acc = 0.0;
            std::uint32_t code = static_cast<std::uint32_t>(r - 1);
            for (std::size_t k = 0; k < r; ++k) {
                acc += dist[k];
                if (u < acc) {
                    code = static_cast<std::uint32_t>(k);
                    break;
                }
            }
            columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] =
                code;
        }
    }

    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "x" + std::to_string(i);
    return Dataset::from_codes(names, columns, arities);
}

std::string to_csv(const Dataset& ds) {
    std::ostringstream os;
    for (int orig = 0; orig < ds.n(); ++orig) {
        if (orig) os << ',';
        os << ds.name(ds.canonical_index(orig));
    }
    os << '\n';
    for (int row = 0; row < ds.m(); ++row) {
        for (int orig = 0; orig < ds.n(); ++orig) {
            if (orig) os << ',';
            os << ds.column(ds.canonical_index(orig))[static_cast<std::size_t>(row)];
        }
        os << '\n';
    }
    return os.str();
}

std::string to_arity_sidecar(const Dataset& ds) {
    std::ostringstream os;
    for (int orig = 0; orig < ds.n(); ++orig) {
        const int v = ds.canonical_index(orig);
        os << ds.name(v) << ',' << ds.arity(v) << '\n';
    }
    return os.str();
}

} // namespace mps
