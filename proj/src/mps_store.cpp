#include "mps/mps_store.hpp"

#include <algorithm>
#include <limits>

namespace mps {

bool entry_less(const MpsEntry& a, const MpsEntry& b) {
    if (a.score != b.score) return a.score < b.score;
    int ca = a.parents.count(), cb = b.parents.count();
    if (ca != cb) return ca < cb;
    int cmp = a.parents.compare_bits(b.parents);
    if (cmp != 0) return cmp < 0;
    return a.flagged < b.flagged;
}

double query_d(const MpsList& list, const VarSet& u) {
    for (const MpsEntry& e : list.entries)
        if (e.parents.subset_of(u)) return e.score;
    return std::numeric_limits<double>::infinity();
}

bool maximality_test(const MpsList& list, const VarSet& u, double score) {
    for (const MpsEntry& e : list.entries) {
        if (e.parents.subset_of(u) && e.parents != u) return score < e.score;
    }
    return true;
}

void merge(std::vector<MpsList>& global, const std::vector<DeltaBatch>& deltas) {
    for (const DeltaBatch& batch : deltas)
        for (const auto& [var, entry] : batch) global[var].entries.push_back(entry);
    for (MpsList& list : global) {
        std::sort(list.entries.begin(), list.entries.end(), entry_less);
        // Identical parents imply identical scores, so duplicates are
        // adjacent; unflagged copies sort first and win.
        auto last = std::unique(list.entries.begin(), list.entries.end(),
                                [](const MpsEntry& a, const MpsEntry& b) {
                                    return a.parents == b.parents;
                                });
        list.entries.erase(last, list.entries.end());
    }
}

std::uint64_t verify_flagged(MpsList& list) {
    std::uint64_t flagged = 0;
    std::vector<MpsEntry> accepted;
    accepted.reserve(list.entries.size());
    for (const MpsEntry& e : list.entries) {
        if (!e.flagged) {
            accepted.push_back(e);
            continue;
        }
        ++flagged;
        bool dominated = false;
        for (const MpsEntry& a : accepted) {
            if (a.parents.subset_of(e.parents)) { // strict: equal sets were deduped
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            accepted.push_back(e);
            accepted.back().flagged = false;
        }
    }
    list.entries = std::move(accepted);
    return flagged;
}

} // namespace mps
