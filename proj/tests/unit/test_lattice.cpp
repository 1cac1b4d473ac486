#include "doctest.h"

#include <unordered_set>
#include <vector>

#include "mps/lattice.hpp"

using namespace mps;

TEST_CASE("root node") {
    LatticeNode r = root(5);
    CHECK(r.parents.empty());
    CHECK(r.targets == VarSet::full(5));
    CHECK(successor_slots(r, 5) == 5);
}

TEST_CASE("max-element successor rule") {
    LatticeNode node;
    node.parents.add(1);
    node.parents.add(3);
    node.targets = VarSet::full(6) - node.parents;
    CHECK(successor_slots(node, 6) == 2);

    std::vector<LatticeNode> kids = successors(node, node.targets, 6);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0].parents == node.parents.with(4));
    CHECK(kids[1].parents == node.parents.with(5));
    CHECK(!kids[0].targets.contains(4));
    CHECK(kids[0].targets.contains(5));
}

TEST_CASE("successors with empty target sets are dropped") {
    LatticeNode node;
    node.parents.add(0);
    node.parents.add(1);
    node.targets = VarSet::single(2);
    // the only slot adds variable 2, leaving no target behind
    CHECK(successors(node, node.targets, 3).empty());
}

TEST_CASE("survivor subset shrinks children targets") {
    LatticeNode node = root(4);
    VarSet survivors;
    survivors.add(2);
    std::vector<LatticeNode> kids = successors(node, survivors, 4);
    // slots 0..3; children other than the one adding 2 keep target {2}
    REQUIRE(kids.size() == 3);
    for (const LatticeNode& k : kids) CHECK(k.targets == VarSet::single(2));
}

TEST_CASE("unpruned expansion reaches every subset exactly once") {
    const int n = 7;
    std::vector<LatticeNode> frontier{root(n)};
    std::unordered_set<VarSet, VarSetHash> seen;
    seen.insert(frontier[0].parents);
    for (int layer = 1; layer <= n; ++layer) {
        std::vector<LatticeNode> next;
        for (const LatticeNode& node : frontier)
            append_successors(node, node.targets, n, next);
        CHECK(next.size() == (layer < n ? layer_node_count(n, layer) : 0));
        for (const LatticeNode& node : next) {
            CHECK(node.parents.count() == layer);
            CHECK(node.targets == VarSet::full(n) - node.parents);
            CHECK(seen.insert(node.parents).second); // unique predecessor
        }
        frontier = std::move(next);
    }
    // all subsets of size < n were generated
    std::uint64_t expected = 0;
    for (int l = 0; l < n; ++l) expected += layer_node_count(n, l);
    CHECK(seen.size() == expected);
}

TEST_CASE("binomial layer counts") {
    CHECK(layer_node_count(6, 0) == 1);
    CHECK(layer_node_count(6, 3) == 20);
    CHECK(layer_node_count(6, 6) == 1);
    CHECK(layer_node_count(6, 7) == 0);
    CHECK(layer_node_count(6, -1) == 0);
    CHECK(layer_node_count(12, 6) == 924);
    CHECK(layer_node_count(37, 9) == 124403620);
    // saturates instead of overflowing
    CHECK(layer_node_count(200, 100) == UINT64_MAX);
}
