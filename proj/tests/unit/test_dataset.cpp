#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "mps/dataset.hpp"

using namespace mps;

namespace {

Dataset from_text(const std::string& text, const ArityOverrides* ov = nullptr) {
    std::istringstream in(text);
    return Dataset::load_csv(in, ov);
}

} // namespace

TEST_CASE("fair coin fixture") {
    Dataset ds = from_text("a,b\n0,0\n0,1\n1,0\n1,1\n");
    CHECK(ds.n() == 2);
    CHECK(ds.m() == 4);
    CHECK(ds.arity(0) == 2);
    CHECK(ds.arity(1) == 2);
    CHECK(ds.full_cond_entropy(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ds.full_cond_entropy(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ds.warnings().empty());
}

TEST_CASE("tokens are coded by first appearance") {
    Dataset ds = from_text("x,y\nred,1\nblue,1\nred,2\nblue,3\n");
    // canonical order puts y (arity 3) before x (arity 2)
    CHECK(ds.n() == 2);
    CHECK(ds.name(0) == "y");
    CHECK(ds.name(1) == "x");
    CHECK(ds.arity(0) == 3);
    CHECK(ds.column(1) == std::vector<std::uint32_t>{0, 1, 0, 1});
    CHECK(ds.column(0) == std::vector<std::uint32_t>{0, 0, 1, 2});
    CHECK(ds.canonical_index(0) == 1);
    CHECK(ds.canonical_index(1) == 0);
    CHECK(ds.original_index(0) == 1);
}

TEST_CASE("windows line endings are tolerated") {
    Dataset ds = from_text("a,b\r\n0,0\r\n1,1\r\n");
    CHECK(ds.n() == 2);
    CHECK(ds.m() == 2);
}

TEST_CASE("canonical order sorts by arity then conditional entropy then index") {
    // v0: 2 states, noisy; v1: 3 states; v2: 2 states, fully determined by v1
    std::ostringstream t;
    t << "v0,v1,v2\n";
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i)
        t << rng() % 2 << ',' << rng() % 3 << ',' << (i % 3 == 1) << '\n';
    Dataset ds = from_text(t.str());
    CHECK(ds.name(0) == "v1"); // highest arity first
    for (int k = 0; k + 1 < ds.n(); ++k) {
        const bool arity_ok = ds.arity(k) >= ds.arity(k + 1);
        CHECK(arity_ok);
        if (ds.arity(k) == ds.arity(k + 1))
            CHECK(ds.full_cond_entropy(k) <= ds.full_cond_entropy(k + 1) + 1e-12);
    }
}

TEST_CASE("full conditional entropy recompute matches stored values") {
    std::ostringstream t;
    t << "a,b,c,d\n";
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i)
        t << rng() % 2 << ',' << rng() % 3 << ',' << rng() % 2 << ','
          << rng() % 4 << '\n';
    Dataset ds = from_text(t.str());
    for (int k = 0; k < ds.n(); ++k)
        CHECK(full_conditional_entropy(ds, k) ==
              doctest::Approx(ds.full_cond_entropy(k)).epsilon(1e-12));
}

TEST_CASE("row order does not change derived quantities") {
    std::vector<std::string> rows;
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i)
        rows.push_back(std::to_string(rng() % 3) + "," +
                       std::to_string(rng() % 2) + "," +
                       std::to_string(rng() % 2));
    std::string a = "p,q,r\n";
    for (const auto& r : rows) a += r + "\n";
    std::shuffle(rows.begin(), rows.end(), rng);
    std::string b = "p,q,r\n";
    for (const auto& r : rows) b += r + "\n";

    Dataset da = from_text(a);
    Dataset db = from_text(b);
    for (int k = 0; k < da.n(); ++k) {
        CHECK(da.name(k) == db.name(k));
        CHECK(da.arity(k) == db.arity(k));
        CHECK(da.full_cond_entropy(k) ==
              doctest::Approx(db.full_cond_entropy(k)).epsilon(1e-12));
    }
}

TEST_CASE("arity sidecar raises declared arity") {
    std::istringstream side("b,4\n");
    ArityOverrides ov = load_arity_sidecar(side);
    Dataset ds = from_text("a,b\n0,0\n0,1\n1,0\n1,1\n", &ov);
    const int b = ds.canonical_index(1);
    CHECK(ds.arity(b) == 4);
    // b now outranks a in the canonical order (higher arity)
    CHECK(ds.name(0) == "b");
}

TEST_CASE("sidecar validation") {
    {
        std::istringstream side("zz,3\n");
        ArityOverrides ov = load_arity_sidecar(side);
        CHECK_THROWS_AS(from_text("a,b\n0,0\n1,1\n", &ov), DatasetError);
    }
    {
        std::istringstream side("a,1\n"); // below observed arity 2
        ArityOverrides ov = load_arity_sidecar(side);
        CHECK_THROWS_AS(from_text("a,b\n0,0\n1,1\n", &ov), DatasetError);
    }
    {
        std::istringstream side("a,0\n");
        CHECK_THROWS_AS(load_arity_sidecar(side), DatasetError);
    }
    {
        std::istringstream side("a,2\na,3\n");
        CHECK_THROWS_AS(load_arity_sidecar(side), DatasetError);
    }
}

TEST_CASE("constant column warns") {
    Dataset ds = from_text("a,b\n0,1\n1,1\n0,1\n");
    REQUIRE(ds.warnings().size() == 1);
    CHECK(ds.warnings()[0].find("constant") != std::string::npos);
    const int b = ds.canonical_index(1);
    CHECK(ds.arity(b) == 1);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(from_text(""), DatasetError);                  // no header
    CHECK_THROWS_AS(from_text("a,b\n0,0\n"), DatasetError);        // m < 2
    CHECK_THROWS_AS(from_text("a,b\n0\n1,1\n"), DatasetError);     // ragged row
    CHECK_THROWS_AS(from_text("a,b\n0,0,0\n1,1,1\n"), DatasetError);
    CHECK_THROWS_AS(from_text("a,\n0,0\n1,1\n"), DatasetError);    // empty name
    CHECK_THROWS_AS(from_text("a,a\n0,0\n1,1\n"), DatasetError);   // dup name
    CHECK_THROWS_AS(from_text("a,b\n0,\n1,1\n"), DatasetError);    // missing cell
}

TEST_CASE("from_codes validates against declared arities") {
    std::vector<std::string> names{"u", "v"};
    std::vector<std::vector<std::uint32_t>> cols{{0, 1, 0}, {0, 1, 2}};
    Dataset ds = Dataset::from_codes(names, cols, {2, 4});
    CHECK(ds.arity(ds.canonical_index(1)) == 4);
    CHECK_THROWS_AS(Dataset::from_codes(names, cols, {2, 2}), DatasetError);
    std::vector<std::vector<std::uint32_t>> ragged{{0, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(Dataset::from_codes(names, ragged, {}), DatasetError);
}

TEST_CASE("nlog2n lookup") {
    Dataset ds = from_text("a,b\n0,0\n0,1\n1,0\n1,1\n");
    CHECK(ds.nlog2n(0) == 0.0);
    CHECK(ds.nlog2n(1) == 0.0);
    CHECK(ds.nlog2n(4) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(ds.nlog2n(3) == doctest::Approx(3.0 * std::log2(3.0)).epsilon(1e-12));
}
