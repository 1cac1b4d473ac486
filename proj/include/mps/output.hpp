#ifndef MPS_OUTPUT_HPP
#define MPS_OUTPUT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mps/dataset.hpp"
#include "mps/engine.hpp"
#include "mps/mps_store.hpp"

namespace mps {

// One record per maximal parent set. Records are ordered by the
// variable's position in the input file, then by the canonical entry
// order within its list; parent names appear in canonical variable order.
// Scores are rendered with fixed 9 decimals so equal results are equal
// bytes.
void write_jsonl(std::ostream& os, const Dataset& ds,
                 const std::vector<MpsList>& lists);

// variable,parents-joined-by-";",score with the same ordering as jsonl.
void write_csv(std::ostream& os, const Dataset& ds,
               const std::vector<MpsList>& lists);

// Flat key=value lines; `extras` lines are appended verbatim at the end.
void write_stats(std::ostream& os, const RunStats& stats,
                 const std::vector<std::pair<std::string, std::string>>& extras = {});

} // namespace mps

#endif // MPS_OUTPUT_HPP
