#include "doctest.h"

#include <vector>

#include "mps/varset.hpp"

using mps::VarSet;

TEST_CASE("empty set basics") {
    VarSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.max_bit() == -1);
    CHECK(!s.contains(0));
    CHECK(s.subset_of(VarSet{}));
}

TEST_CASE("add remove contains count") {
    VarSet s;
    s.add(3);
    s.add(17);
    CHECK(s.contains(3));
    CHECK(s.contains(17));
    CHECK(!s.contains(4));
    CHECK(s.count() == 2);
    CHECK(s.max_bit() == 17);
    s.remove(17);
    CHECK(!s.contains(17));
    CHECK(s.max_bit() == 3);
    CHECK(s.with(9).contains(9));
    CHECK(!s.with(9).contains(8));
    CHECK(!s.without(3).contains(3));
    CHECK(s.contains(3)); // with/without do not mutate
}

TEST_CASE("full covers exactly the first n bits") {
    for (int n : {0, 1, 5, 63, 64, 65, 128}) {
        VarSet s = VarSet::full(n);
        CHECK(s.count() == n);
        if (n > 0) {
            CHECK(s.contains(0));
            CHECK(s.contains(n - 1));
            CHECK(s.max_bit() == n - 1);
        }
        if (n < VarSet::kCapacity) CHECK(!s.contains(n));
    }
}

TEST_CASE("single") {
    VarSet s = VarSet::single(70);
    CHECK(s.count() == 1);
    CHECK(s.contains(70));
    CHECK(s.max_bit() == 70);
}

TEST_CASE("word boundary bits") {
    VarSet s;
    s.add(63);
    s.add(64);
    CHECK(s.count() == 2);
    CHECK(s.max_bit() == 64);
    s.add(127);
    CHECK(s.max_bit() == 127);
    s.remove(127);
    s.remove(64);
    CHECK(s.max_bit() == 63);
}

TEST_CASE("subset and set algebra") {
    VarSet a;
    a.add(1);
    a.add(5);
    VarSet b = a.with(9);
    CHECK(a.subset_of(b));
    CHECK(!b.subset_of(a));
    CHECK(a.subset_of(a));

    CHECK((a | b) == b);
    CHECK((a & b) == a);
    VarSet diff = b - a;
    CHECK(diff.count() == 1);
    CHECK(diff.contains(9));
    CHECK((a - b).empty());
}

TEST_CASE("equality and numeric comparison") {
    VarSet a = VarSet::single(0);
    VarSet b = VarSet::single(1);
    VarSet ab = a | b;
    VarSet c = VarSet::single(2);
    CHECK(a.compare_bits(b) < 0);
    CHECK(b.compare_bits(ab) < 0);
    CHECK(ab.compare_bits(c) < 0);
    CHECK(c.compare_bits(a) > 0);
    CHECK(a.compare_bits(a) == 0);
    // numeric order spans words: bit 64 outranks any word-0 pattern
    CHECK(VarSet::full(64).compare_bits(VarSet::single(64)) < 0);
}

TEST_CASE("for_each ascending") {
    VarSet s;
    for (int k : {2, 64, 7, 127, 0}) s.add(k);
    std::vector<int> seen;
    s.for_each([&](int k) { seen.push_back(k); });
    CHECK(seen == std::vector<int>{0, 2, 7, 64, 127});
}

TEST_CASE("hash differs on small perturbations") {
    VarSet a = VarSet::full(10);
    CHECK(a.hash() != a.without(3).hash());
    CHECK(a.hash() != VarSet{}.hash());
}
