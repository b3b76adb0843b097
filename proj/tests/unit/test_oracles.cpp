#include <doctest.h>

#include <map>
#include <set>

#include "a2zeta/errors.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/oracles.hpp"
#include "support.hpp"

using namespace a2zeta;

namespace {

BigInt as_big(std::uint64_t x) { return BigInt(std::to_string(x)); }

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("type-1 geodesic counts equal traces of L_E") {
    const TypedComplex cx = testing::bundled_q2();
    const auto tr = edge_operator(cx).trace_powers(8);
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(as_big(count_type1_geodesics(cx, n)) == tr[static_cast<std::size_t>(n)]);
        if (n % 3 != 0) CHECK(count_type1_geodesics(cx, n) == 0);
    }
    CHECK(count_type1_geodesics(cx, 3) == 186);
}

TEST_CASE("gallery counts equal traces of L_B") {
    const TypedComplex cx = testing::bundled_q2();
    const auto tr = chamber_operator(cx).trace_powers(9);
    for (int l = 1; l <= 9; ++l) CHECK(as_big(count_galleries(cx, l)) == tr[static_cast<std::size_t>(l)]);
    CHECK(count_galleries(cx, 4) == 0);
    const TypedComplex q3 = testing::search_q3();
    const auto tr3 = chamber_operator(q3).trace_powers(6);
    CHECK(as_big(count_galleries(q3, 3)) == tr3[3]);
    CHECK(as_big(count_galleries(q3, 6)) == tr3[6]);
    CHECK(as_big(count_type1_geodesics(q3, 3)) == edge_operator(q3).trace_powers(3)[3]);
}

TEST_CASE("counts do not depend on the worker count") {
    const TypedComplex cx = testing::bundled_q2();
    for (int l : {3, 6}) {
        CHECK(count_galleries(cx, l, {10'000'000, 1}) == count_galleries(cx, l, {10'000'000, 4}));
        CHECK(count_type1_geodesics(cx, l, {10'000'000, 1}) == count_type1_geodesics(cx, l, {10'000'000, 3}));
        CHECK(enumerate_galleries(cx, l, {10'000'000, 1}) == enumerate_galleries(cx, l, {10'000'000, 2}));
    }
}

TEST_CASE("node budget") {
    const TypedComplex cx = testing::bundled_q2();
    CHECK_THROWS_AS(count_type1_geodesics(cx, 6, {100, 1}), Error);
    CHECK_THROWS_AS(count_galleries(cx, 9, {100, 2}), Error);
}

TEST_CASE("gallery boundaries") {
    const TypedComplex cx = testing::bundled_q2();
    const SparseOperator le = edge_operator(cx);
    for (int l : {6, 9}) {
        const auto gs = enumerate_galleries(cx, l);
        CHECK(gs.size() == count_galleries(cx, l));
        for (const Gallery& g : gs) {
            const auto cycles = gallery_boundary(cx, g);
            REQUIRE(cycles.size() == (l % 2 == 0 ? 2u : 1u));
            for (const auto& c : cycles) {
                CHECK(c.size() == static_cast<std::size_t>(l % 2 == 0 ? l / 2 : l));
                for (std::size_t i = 0; i < c.size(); ++i)
                    CHECK(le.at(static_cast<std::size_t>(c[i]), static_cast<std::size_t>(c[(i + 1) % c.size()])) == 1);
            }
        }
        const BoundaryReport r = check_gallery_boundaries(cx, l);
        CHECK(r.pass);
        CHECK(r.galleries == gs.size());
    }
}

TEST_CASE("shift classes have sizes dividing the length") {
    const TypedComplex cx = testing::bundled_q2();
    for (int l : {3, 6, 9}) {
        const auto gs = enumerate_galleries(cx, l);
        const std::set<Gallery> all(gs.begin(), gs.end());
        std::set<Gallery> seen;
        for (const Gallery& g : gs) {
            if (seen.count(g)) continue;
            std::set<Gallery> cls;
            Gallery h = g;
            for (int s = 0; s < l; ++s) {
                cls.insert(h);
                std::rotate(h.begin(), h.begin() + 1, h.end());
            }
            for (const auto& x : cls) CHECK(all.count(x) == 1);
            CHECK(l % static_cast<int>(cls.size()) == 0);
            seen.insert(cls.begin(), cls.end());
        }
        CHECK(seen.size() == gs.size());
    }
}

TEST_CASE("non-galleries are rejected") {
    const TypedComplex cx = testing::bundled_q2();
    CHECK_THROWS_AS(gallery_boundary(cx, Gallery{{0, 0}, {0, 1}, {0, 2}}), Error);
    CHECK_THROWS_AS(gallery_boundary(cx, Gallery{}), Error);
    auto g = enumerate_galleries(cx, 3).front();
    g.pop_back();
    CHECK_THROWS_AS(gallery_boundary(cx, g), Error);
}

}
