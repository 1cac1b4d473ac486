#ifndef MPS_DATASET_HPP
#define MPS_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mps {

// Raised for malformed or inconsistent input data.
struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-variable arity overrides, e.g. parsed from a sidecar file. An
// override may only raise the observed arity (states that exist in the
// domain but never occur in the sample).
struct ArityOverrides {
    std::vector<std::pair<std::string, int>> entries;
};

ArityOverrides load_arity_sidecar(std::istream& in);

// Immutable column-major table of m categorical observations over n
// variables. After construction every index exposed by the accessors is
// canonical: variables are permuted so that arity is non-increasing, with
// H(Xi | X - {Xi}) ascending and then the original index as tie-breaks.
// Output mapping back to the input goes through original_index()/name().
class Dataset {
public:
    // `columns` are state codes per original variable, codes in
    // [0, observed distinct count). `declared_arities` (parallel to
    // columns, 0 = none) may raise an arity above the observed count.
    static Dataset from_codes(std::vector<std::string> names,
                              std::vector<std::vector<std::uint32_t>> columns,
                              std::vector<int> declared_arities = {});

    // Header-bearing CSV of categorical tokens, no missing cells. Codes
    // are assigned per column in first-appearance order.
    static Dataset load_csv(std::istream& in,
                            const ArityOverrides* overrides = nullptr);

    int n() const { return static_cast<int>(columns_.size()); }
    int m() const { return m_; }

    const std::vector<std::uint32_t>& column(int k) const { return columns_[k]; }
    int arity(int k) const { return arities_[k]; }
    double full_cond_entropy(int k) const { return full_cond_entropy_[k]; }

    // Canonical position -> original variable index.
    int original_index(int k) const { return order_[k]; }
    int canonical_index(int original) const { return inverse_order_[original]; }
    const std::string& name(int k) const { return names_[order_[k]]; }

    const std::vector<std::string>& warnings() const { return warnings_; }

    // k * log2(k) for k in [0, m]; shared lookup for entropy sums.
    double nlog2n(std::uint32_t k) const { return nlog2n_[k]; }

private:
    Dataset() = default;

    int m_ = 0;
    std::vector<std::vector<std::uint32_t>> columns_; // canonical order
    std::vector<int> arities_;                        // canonical order
    std::vector<double> full_cond_entropy_;           // canonical order, bits
    std::vector<std::string> names_;                  // original order
    std::vector<int> order_;                          // canonical -> original
    std::vector<int> inverse_order_;                  // original -> canonical
    std::vector<std::string> warnings_;
    std::vector<double> nlog2n_;
};

// Permutation sorted by (arity descending, conditional entropy ascending,
// index ascending).
std::vector<int> canonical_order(const std::vector<int>& arities,
                                 const std::vector<double>& cond_entropies);

// H(Xi | X - {Xi}) in bits, recomputed from scratch by grouping rows on
// the projection over all other variables; k is a canonical index.
double full_conditional_entropy(const Dataset& ds, int k);

} // namespace mps

#endif // MPS_DATASET_HPP
