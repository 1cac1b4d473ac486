#include "doctest.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "mps/mps_store.hpp"

using namespace mps;

namespace {

VarSet vs(std::initializer_list<int> bits) {
    VarSet s;
    for (int b : bits) s.add(b);
    return s;
}

MpsEntry entry(std::initializer_list<int> bits, double score, bool flagged = false) {
    return MpsEntry{vs(bits), score, flagged};
}

} // namespace

TEST_CASE("canonical entry order") {
    CHECK(entry_less(entry({0}, 1.0), entry({0}, 2.0)));       // score first
    CHECK(entry_less(entry({2}, 1.0), entry({0, 1}, 1.0)));    // then cardinality
    CHECK(entry_less(entry({0, 1}, 1.0), entry({0, 2}, 1.0))); // then bitmask
    CHECK(entry_less(entry({1}, 1.0, false), entry({1}, 1.0, true)));
    CHECK(!entry_less(entry({1}, 1.0, true), entry({1}, 1.0, false)));
    CHECK(!entry_less(entry({1}, 1.0), entry({1}, 1.0)));
}

TEST_CASE("query_d returns the best subset entry") {
    MpsList list;
    list.entries = {entry({1}, 6.0), entry({}, 67.0)};
    CHECK(query_d(list, vs({1})) == 6.0);
    CHECK(query_d(list, vs({1, 3})) == 6.0);
    CHECK(query_d(list, vs({3})) == 67.0); // only the empty set applies
    CHECK(query_d(list, VarSet{}) == 67.0);
    CHECK(query_d(MpsList{}, vs({1})) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("maximality is strict") {
    MpsList list;
    list.entries = {entry({1}, 6.0), entry({}, 67.0)};
    CHECK(maximality_test(list, vs({1, 2}), 5.9));
    CHECK(!maximality_test(list, vs({1, 2}), 6.0)); // tie loses
    CHECK(!maximality_test(list, vs({1, 2}), 6.1));
    // the candidate's own entry is not a strict subset
    CHECK(maximality_test(list, vs({1}), 6.0));
}

TEST_CASE("merge restores canonical order and deduplicates") {
    std::vector<MpsList> global(2);
    global[0].entries = {entry({}, 10.0)};

    std::vector<DeltaBatch> batches(3);
    batches[0].push_back({0, entry({2}, 4.0, true)});
    batches[1].push_back({0, entry({1}, 4.0)});
    batches[2].push_back({0, entry({2}, 4.0)}); // duplicate parents, unflagged
    batches[2].push_back({1, entry({0}, 1.0)});

    merge(global, batches);

    REQUIRE(global[0].entries.size() == 3);
    CHECK(global[0].entries[0].parents == vs({1}));
    CHECK(global[0].entries[1].parents == vs({2}));
    CHECK_FALSE(global[0].entries[1].flagged); // unflagged twin won
    CHECK(global[0].entries[2].parents == VarSet{});
    REQUIRE(global[1].entries.size() == 1);
    CHECK(global[1].entries[0].score == 1.0);
}

TEST_CASE("verification drops dominated flagged entries") {
    MpsList list;
    list.entries = {entry({0}, 8.0), entry({0, 1}, 10.0, true),
                    entry({}, 20.0)};
    std::sort(list.entries.begin(), list.entries.end(), entry_less);
    const std::uint64_t flagged = verify_flagged(list);
    CHECK(flagged == 1);
    REQUIRE(list.entries.size() == 2);
    CHECK(list.entries[0].parents == vs({0}));
    CHECK(list.entries[1].parents == VarSet{});
    for (const MpsEntry& e : list.entries) CHECK_FALSE(e.flagged);
}

TEST_CASE("verification keeps flagged entries that are truly maximal") {
    MpsList list;
    list.entries = {entry({1}, 5.0, true), entry({0}, 8.0), entry({}, 20.0)};
    std::sort(list.entries.begin(), list.entries.end(), entry_less);
    const std::uint64_t flagged = verify_flagged(list);
    CHECK(flagged == 1);
    REQUIRE(list.entries.size() == 3);
    CHECK(list.entries[0].parents == vs({1}));
    CHECK_FALSE(list.entries[0].flagged);
}

TEST_CASE("flagged duplicate of an accepted equal-score subset is dropped") {
    // a flagged DFS rediscovery ties an unflagged subset at equal score;
    // the unflagged entry sorts first and dominates
    MpsList list;
    list.entries = {entry({0}, 8.0), entry({0, 2}, 8.0, true)};
    std::sort(list.entries.begin(), list.entries.end(), entry_less);
    verify_flagged(list);
    REQUIRE(list.entries.size() == 1);
    CHECK(list.entries[0].parents == vs({0}));
}
