#ifndef MPS_SYNTHETIC_HPP
#define MPS_SYNTHETIC_HPP

#include <cstdint>
#include <string>

#include "mps/dataset.hpp"

namespace mps {

// Sampling recipe for a random sparse dependency structure: a DAG over n
// categorical variables (edges only from lower to higher index, at most
// max_parents each) with Dirichlet-drawn conditional tables.
struct SyntheticSpec {
    int n = 10;
    int m = 200;
    int min_arity = 2;
    int max_arity = 4;
    int max_parents = 3;
    double concentration = 0.5; // Dirichlet parameter per CPT row
    std::uint64_t seed = 1;
};

Dataset make_synthetic(const SyntheticSpec& spec);

// Render a dataset back to loadable CSV text (original column order) and
// to the matching arity sidecar. The sidecar matters whenever a category
// never occurs in the sample, since observed arities would otherwise
// underestimate the declared ones.
std::string to_csv(const Dataset& ds);
std::string to_arity_sidecar(const Dataset& ds);

} // namespace mps

#endif // MPS_SYNTHETIC_HPP
