#include <doctest.h>

#include "a2zeta/errors.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/zeta.hpp"
#include "support.hpp"

using namespace a2zeta;

namespace {

// Brute force over all ordered pairs of type-1 edges.
IntMatrix edge_oracle(const TypedComplex& cx) {
    const std::size_t e = cx.edge_count();
    IntMatrix m(e);
    for (std::size_t a = 0; a < e; ++a)
        for (std::size_t b = 0; b < e; ++b) {
            if (cx.edge(static_cast<int>(a)).dst != cx.edge(static_cast<int>(b)).src) continue;
            bool shared = false;
            for (const auto& ch : cx.chambers()) {
                bool ha = false, hb = false;
                for (int x : ch) {
                    ha = ha || x == static_cast<int>(a);
                    hb = hb || x == static_cast<int>(b);
                }
                shared = shared || (ha && hb);
            }
            if (!shared) m.at(a, b) = 1;
        }
    return m;
}

// Brute force over all ordered pairs of directed chambers.
IntMatrix chamber_oracle(const TypedComplex& cx) {
    const std::size_t c = cx.chamber_count();
    IntMatrix m(3 * c);
    for (std::size_t c1 = 0; c1 < c; ++c1)
        for (std::size_t s1 = 0; s1 < 3; ++s1) {
            const int e2 = cx.chamber(static_cast<int>(c1))[(s1 + 1) % 3];
            for (std::size_t c2 = 0; c2 < c; ++c2) {
                if (c2 == c1) continue;
                for (std::size_t j = 0; j < 3; ++j)
                    if (cx.chamber(static_cast<int>(c2))[j] == e2) m.at(3 * c1 + s1, 3 * c2 + (j + 1) % 3) += 1;
            }
        }
    return m;
}

bool equal(const IntMatrix& a, const IntMatrix& b) { return a.n == b.n && a.a == b.a; }

IntPoly trivial_factor(int q) {
    const long q3 = static_cast<long>(q) * q * q;
    return IntPoly::one_minus(1, 3) * IntPoly::one_minus(q3, 3) * IntPoly::one_minus(q3 * q3, 3);
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("sparse operator basics") {
    const SparseOperator op(IndexSpace::Vertices, IndexSpace::Vertices, 3, 3, {{0, 1, 2}, {0, 1, 3}, {2, 0, 1}, {1, 1, 4}, {1, 1, -4}});
    CHECK(op.at(0, 1) == 5);
    CHECK(op.nnz() == 2);
    CHECK(op.at(1, 1) == 0);
    CHECK(op.transpose().at(1, 0) == 5);
    CHECK(op.with_entry(0, 1, 0).nnz() == 1);
    CHECK(parse_sparse(serialize_sparse(op)) == op);
    CHECK_THROWS_AS(SparseOperator(IndexSpace::Vertices, IndexSpace::Vertices, 2, 2, {{2, 0, 1}}), Error);
    CHECK_THROWS_AS(parse_sparse("sparse 2 2 1\n0 5 1\n"), Error);
    CHECK_THROWS_AS(parse_sparse("sparse 2 2 2\n0 1 1\n"), Error);
    const PolyMatrix m = op.identity_plus(-1, 2);
    CHECK(m.at(0, 0) == IntPoly(1));
    CHECK(m.at(0, 1) == IntPoly::monomial(-5, 2));
}

TEST_CASE("bundled vertex operators are 7 times the type shift") {
    const VertexHecke vh = vertex_hecke(testing::bundled_q2());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(vh.a1.at(i, j) == (j == (i + 1) % 3 ? 7 : 0));
    CHECK(vh.a2 == vh.a1.transpose());
}

TEST_CASE("operator invariants on every corpus complex") {
    for (const TypedComplex& cx : {testing::bundled_q2(), testing::search_q3()}) {
        const long q = cx.q();
        CAPTURE(q);
        const VertexHecke vh = vertex_hecke(cx);
        CHECK(vh.a2 == vh.a1.transpose());
        for (std::size_t i = 0; i < cx.vertex_count(); ++i) {
            CHECK(vh.a1.row_sum(i) == q * q + q + 1);
            CHECK(vh.a2.row_sum(i) == q * q + q + 1);
        }
        const SparseOperator le = edge_operator(cx), lb = chamber_operator(cx);
        CHECK(le.row_space() == IndexSpace::Edges1);
        CHECK(lb.row_space() == IndexSpace::DirectedChambers);
        for (std::size_t i = 0; i < le.rows(); ++i) CHECK(le.row_sum(i) == q * q);
        for (std::size_t i = 0; i < lb.rows(); ++i) CHECK(lb.row_sum(i) == q);
        CHECK(equal(le.to_dense(), edge_oracle(cx)));
        CHECK(equal(lb.to_dense(), chamber_oracle(cx)));
        CHECK(type2_edge_operator(cx) == le.transpose());
        for (const auto& ch : cx.chambers())
            for (std::size_t s = 0; s < 3; ++s) CHECK(le.at(static_cast<std::size_t>(ch[s]), static_cast<std::size_t>(ch[(s + 1) % 3])) == 0);
        const auto tl = lb.trace_powers(9);
        for (std::size_t m = 1; m <= 9; ++m)
            if (m % 3 != 0) CHECK(tl[m] == 0);
        CHECK(le.trace_powers(1)[1] == 0);
    }
}

}

TEST_SUITE("zeta-engine") {

TEST_CASE("bundled determinants") {
    const ZetaBundle b = zeta_bundle(testing::bundled_q2());
    CHECK(b.chi == 3);
    CHECK(b.dvertex == trivial_factor(2));
    CHECK(b.pb.degree() == 63);
    CHECK(b.pb.only_powers_of(3));
    CHECK(b.pe.degree() == 21);
    CHECK(b.pe2 == b.pe.substitute_power(2));
    CHECK(3 * b.chi + b.pe.degree() + b.pe2.degree() == b.dvertex.degree() + b.pb.degree());
    for (const IntPoly* p : {&b.dvertex, &b.pb, &b.pe, &b.pe2}) CHECK(p->coeff(0) == 1);
}

TEST_CASE("main identity holds and detects perturbation") {
    const TypedComplex cx = testing::bundled_q2();
    const IdentityReport r = check_main_identity(zeta_bundle(cx));
    CHECK(r.pass);
    CHECK(r.residual.is_zero());
    CHECK(r.lhs == r.rhs);
    const VertexHecke vh = vertex_hecke(cx);
    const SparseOperator lb = chamber_operator(cx);
    const auto t = lb.triplets();
    const SparseOperator broken = lb.with_entry(static_cast<std::size_t>(t[0].row), static_cast<std::size_t>(t[0].col), 0);
    const ZetaBundle bad = zeta_bundle_from_operators(2, 3, vh.a1, vh.a2, edge_operator(cx), broken);
    const IdentityReport rb = check_main_identity(bad);
    CHECK(!rb.pass);
    CHECK(!rb.residual.is_zero());
}

TEST_CASE("main identity on the q=3 search complex") {
    const ZetaBundle b = zeta_bundle(testing::search_q3(), DetOptions{2});
    CHECK(b.chi == 16);
    CHECK(check_main_identity(b).pass);
}

TEST_CASE("trivial factor divides the vertex determinant") {
    for (const TypedComplex& cx : {testing::bundled_q2(), testing::search_q3()}) {
        const VertexHecke vh = vertex_hecke(cx);
        const IntPoly d = det_poly(vertex_matrix(cx.q(), vh.a1, vh.a2));
        CHECK(exact_quotient(d, trivial_factor(cx.q())).has_value());
    }
}

TEST_CASE("refuses invalid or disconnected complexes") {
    const TypedComplex bad = parse_complex(read_file(testing::data_path("corrupted_q2.cx3")));
    CHECK_THROWS_AS(zeta_bundle(bad), Error);
}

TEST_CASE("zeta function relations") {
    const ZetaBundle b = zeta_bundle(testing::bundled_q2());
    const ZetaFunctions z = zeta_functions(b);
    CHECK(z.z1.substitute_power(2) / z.z2.negate_variable() == z.zminus);
    CHECK(z.z == z.z1 * z.z1.substitute_power(2));
    const RationalFunction vertex(IntPoly::one_minus(1, 3).pow(3), b.dvertex);
    CHECK(vertex == z.z1 * z.zminus);
    const Series lz1 = series_log_derivative(z.z1, 10);
    const auto tr = edge_operator(testing::bundled_q2()).trace_powers(10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(lz1[n] == BigRat(tr[n]));
    CHECK(series_log_derivative(z.zminus, 18).is_nonnegative_integral());
    // poles of Z2 only at u^{3k}
    CHECK(z.z2.den().only_powers_of(3));
}

TEST_CASE("hecke series aggregates") {
    const TypedComplex cx = testing::bundled_q2();
    const HeckeSeriesTable t = hecke_series(cx, 9);
    REQUIRE(t.aggregate.size() == 10);
    const VertexHecke vh = vertex_hecke(cx);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(t.aggregate[0].at(i, j) == (i == j ? 1 : 0));
            CHECK(t.aggregate[1].at(i, j) == vh.a1.at(i, j));
        }
    for (const IntMatrix& m : t.aggregate)
        for (const BigInt& x : m.a) CHECK(x >= 0);
}

TEST_CASE("series identity with extraction") {
    const TypedComplex cx = testing::bundled_q2();
    const SeriesIdentityReport r = check_section9_series(cx, 12);
    CHECK(r.identity_pass);
    CHECK(r.extraction_pass);
    CHECK(r.vertex_side[0] == 0);
    CHECK(r.operator_side[0] == 0);
    CHECK(r.trace_bn0.is_nonnegative_integral());
    CHECK(r.trace_bn0[3] == 336);
    // prefix property
    const SeriesIdentityReport shorter = check_section9_series(cx, 6);
    CHECK(shorter.pass());
    for (std::size_t i = 0; i <= 6; ++i) CHECK(shorter.trace_bn0[i] == r.trace_bn0[i]);
    CHECK(check_section9_series(testing::search_q3(), 6).pass());
}

TEST_CASE("trivial zeros and the Ramanujan checker") {
    const ZetaBundle b = zeta_bundle(testing::bundled_q2());
    const RamanujanReport r = ramanujan_check(b, 1e-6);
    CHECK(r.ramanujan);
    CHECK(r.dvertex.trivial_found == 9);
    CHECK(r.dvertex.surplus == 0);
    CHECK(r.dvertex.missing.empty());
    std::size_t pe_total = 0;
    for (const ModulusBin& m : r.pe_histogram) {
        pe_total += m.count;
        if (m.label == "other") CHECK(m.count == 0);
    }
    CHECK(pe_total == 21);
    CHECK_THROWS_AS(ramanujan_check(b, 0), Error);
    CHECK_THROWS_AS(ramanujan_check(b, 1e-2), Error);

    const TrivialZeroSplit only = split_trivial_zeros(IntPoly::one_minus(1, 3), 2, 1e-9);
    CHECK(only.trivial_found == 3);
    CHECK(only.missing.size() == 6);
    for (const ClassifiedRoot& c : only.roots) CHECK(c.cls == "trivial");

    const TrivialZeroSplit extra = split_trivial_zeros(trivial_factor(2) * IntPoly::one_minus(1, 3), 2, 1e-6);
    CHECK(extra.trivial_found == 9);
    CHECK(extra.surplus == 3);
}

}
