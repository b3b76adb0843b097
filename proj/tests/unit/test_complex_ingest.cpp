#include <doctest.h>

#include <set>

#include "a2zeta/complex.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/ingest.hpp"
#include "support.hpp"

using namespace a2zeta;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

std::string replace_line(const std::string& text, const std::string& from, const std::string& to) {
    std::string out = text;
    const auto pos = out.find(from);
    REQUIRE(pos != std::string::npos);
    out.replace(pos, from.size(), to);
    return out;
}

}  // namespace

TEST_SUITE("complex-core") {

TEST_CASE("bundled complex passes every check") {
    const TypedComplex cx = testing::bundled_q2();
    CHECK(cx.q() == 2);
    CHECK(cx.vertex_count() == 3);
    CHECK(cx.edge_count() == 21);
    CHECK(cx.chamber_count() == 21);
    const ValidationReport rep = validate(cx);
    CHECK(rep.ok());
    for (const Check& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    CHECK(euler_characteristic(cx) == 3);
    CHECK(euler_characteristic_formula(2, 3) == 3);
    CHECK(euler_characteristic_formula(3, 3) == 16);
    CHECK(is_connected(cx));
}

TEST_CASE("search-built q=3 complex is valid with chi 16") {
    const TypedComplex cx = testing::search_q3();
    CHECK(validate(cx).ok());
    CHECK(euler_characteristic(cx) == 16);
    CHECK(cx.edge_count() == 3 * 13);
    CHECK(cx.chamber_count() == 4 * 13);
}

TEST_CASE("deleting a chamber breaks the edge-chamber count") {
    const TypedComplex cx = testing::bundled_q2();
    std::vector<ChamberEdges> ch(cx.chambers().begin(), cx.chambers().end() - 1);
    const TypedComplex broken(2, {0, 1, 2}, std::vector<Edge>(cx.edges().begin(), cx.edges().end()), ch);
    const ValidationReport rep = validate(broken);
    CHECK(!rep.ok());
    CHECK(!rep.find(check_names::kEdgeChambers)->pass);
    CHECK_THROWS_AS(require_valid(broken), Error);
}

TEST_CASE("self-loop violates the type increment") {
    const TypedComplex loop(2, {0}, {Edge{0, 0}}, {});
    const ValidationReport rep = validate(loop);
    CHECK(!rep.find(check_names::kTypeIncrement)->pass);
    CHECK(std::string(rep.first_failure()->name) == check_names::kTypeIncrement);
}

TEST_CASE("corrupted fixture names the first failing invariant") {
    const TypedComplex cx = parse_complex(read_file(testing::data_path("corrupted_q2.cx3")));
    const ValidationReport rep = validate(cx);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->name == check_names::kEdgeChambers);
}

TEST_CASE("directed chambers") {
    const auto dc = directed_chambers(testing::bundled_q2());
    CHECK(dc.size() == 63);
    CHECK(dc.front() == DirectedChamber{0, 0});
    CHECK(dc[4] == DirectedChamber{1, 1});
    CHECK(directed_chambers(TypedComplex(2, {0}, {}, {})).empty());
}

TEST_CASE("link check on hand-made graphs") {
    const ProjectivePlane pl = build_plane(2);
    std::vector<std::pair<int, int>> inc;
    for (int p = 0; p < 7; ++p)
        for (int l : pl.point_lines[static_cast<std::size_t>(p)]) inc.emplace_back(p, l);
    CHECK(check_projective_link(7, 7, inc, 2).pass);
    inc.pop_back();
    CHECK(!check_projective_link(7, 7, inc, 2).pass);
}

TEST_CASE("structural invariants on every corpus complex") {
    for (const TypedComplex& cx : {testing::bundled_q2(), testing::search_q3()}) {
        const long q = cx.q(), v = static_cast<long>(cx.vertex_count());
        CHECK(static_cast<long>(cx.edge_count()) == v * (q * q + q + 1));
        CHECK(static_cast<long>(cx.chamber_count()) * 3 == v * (q + 1) * (q * q + q + 1));
        CHECK(euler_characteristic(cx) == euler_characteristic_formula(cx.q(), cx.vertex_count()));
    }
}

}

TEST_SUITE("ingest") {

TEST_CASE("projective planes satisfy the axioms exhaustively") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
        CAPTURE(q);
        const ProjectivePlane pl = build_plane(q);
        const std::size_t n = static_cast<std::size_t>(q * q + q + 1);
        REQUIRE(pl.size() == n);
        CHECK(check_plane_axioms(pl).empty());
        // independent pass over the incidence relation
        for (std::size_t l = 0; l < n; ++l) {
            int on = 0;
            for (std::size_t p = 0; p < n; ++p) on += pl.incident(static_cast<int>(p), static_cast<int>(l));
            CHECK(on == q + 1);
        }
        bool pairs_ok = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                int joint = 0, meet = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    joint += pl.incident(static_cast<int>(a), static_cast<int>(l)) && pl.incident(static_cast<int>(b), static_cast<int>(l));
                    meet += pl.incident(static_cast<int>(l), static_cast<int>(a)) && pl.incident(static_cast<int>(l), static_cast<int>(b));
                }
                pairs_ok = pairs_ok && joint == 1 && meet == 1;
            }
        CHECK(pairs_ok);
    }
    CHECK(build_plane(2).line_points[0].size() == 3);
    CHECK(build_plane(3).line_points[0].size() == 4);
    CHECK(kind_of([] { build_plane(6); }) == ErrorKind::UnsupportedOrder);
}

TEST_CASE("search finds valid presentations") {
    const ProjectivePlane pl = build_plane(2);
    SearchOptions opts;
    const auto one = search_triangle_presentations(pl, opts);
    REQUIRE(one.size() == 1);
    CHECK(one[0].triples.size() == 21);
    const std::set<std::array<int, 3>> ts(one[0].triples.begin(), one[0].triples.end());
    for (const auto& t : one[0].triples) CHECK(ts.count({t[1], t[2], t[0]}) == 1);
    check_presentation(pl, one[0]);
    CHECK(validate(complex_from_presentation(pl, one[0])).ok());
    opts.limit = 0;
    CHECK(search_triangle_presentations(pl, opts).empty());
}

TEST_CASE("search is deterministic and independent of jobs") {
    for (int q : {2, 3}) {
        const ProjectivePlane pl = build_plane(q);
        for (std::uint64_t seed : {0u, 1u, 17u}) {
            SearchOptions a;
            a.seed = seed;
            a.limit = q == 2 ? 5 : 2;
            const auto r1 = search_triangle_presentations(pl, a);
            const auto r2 = search_triangle_presentations(pl, a);
            CHECK(r1 == r2);
            SearchOptions b = a;
            b.jobs = 3;
            CHECK(search_triangle_presentations(pl, b) == r1);
            for (const auto& tp : r1) {
                check_presentation(pl, tp);
                CHECK(validate(complex_from_presentation(pl, tp)).ok());
            }
        }
    }
}

TEST_CASE("golden presentation regenerates the bundled complex") {
    const TrianglePresentation tp = parse_presentation(read_file(testing::data_path("bundled_q2.tp")));
    const ProjectivePlane pl = build_plane(tp.q);
    SearchOptions opts;
    const auto found = search_triangle_presentations(pl, opts);
    REQUIRE(!found.empty());
    CHECK(found[0] == tp);
    CHECK(serialize_complex(complex_from_presentation(pl, tp)) == read_file(testing::data_path("bundled_q2.cx3")));
}

TEST_CASE("invalid presentations are rejected") {
    const TrianglePresentation tp = parse_presentation(read_file(testing::data_path("bundled_q2.tp")));
    const ProjectivePlane pl = build_plane(2);
    TrianglePresentation bad = tp;
    bad.triples.pop_back();
    CHECK(kind_of([&] { check_presentation(pl, bad); }) == ErrorKind::PresentationInvalid);
    bad = tp;
    std::swap(bad.lambda[0], bad.lambda[1]);
    CHECK(kind_of([&] { check_presentation(pl, bad); }) == ErrorKind::PresentationInvalid);
}

TEST_CASE("file round trips") {
    const TypedComplex cx = testing::bundled_q2();
    CHECK(parse_complex(serialize_complex(cx)) == cx);
    const TypedComplex q3 = testing::search_q3();
    CHECK(parse_complex(serialize_complex(q3)) == q3);
    const TrianglePresentation tp = parse_presentation(read_file(testing::data_path("bundled_q2.tp")));
    CHECK(parse_presentation(serialize_presentation(tp)) == tp);
}

TEST_CASE("parse errors") {
    const std::string text = serialize_complex(testing::bundled_q2());
    CHECK(kind_of([&] { parse_complex(replace_line(text, "q 2\n", "q 0\n")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse_complex(replace_line(text, "a2complex v1", "a2complex v9")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse_complex(replace_line(text, "chamber 0 1 20", "chamber 0 1 99")); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { parse_complex(replace_line(text, "edge 3 0 1", "edge 4 0 1")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse_complex(replace_line(text, "edge 3 0 1", "edge 3 0 x")); }) == ErrorKind::Parse);
    try {
        parse_complex(replace_line(text, "q 2\n", "q 0\n"));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(kind_of([] { parse_presentation("trianglepres v1\nq 2\nlambda 0 9\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { read_file("/nonexistent/file.cx3"); }) == ErrorKind::Parse);
}

}
