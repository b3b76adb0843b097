#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "a2zeta/errors.hpp"
#include "a2zeta/graph.hpp"

using namespace a2zeta;

namespace {

BigInt as_big(std::uint64_t x) { return BigInt(std::to_string(x)); }

// Regular form (1-u^2)^chi / det(I - A u + q u^2 I) built directly.
RationalFunction regular_form(const Graph& g, int q) {
    PolyMatrix m(static_cast<std::size_t>(g.vertex_count));
    for (int i = 0; i < g.vertex_count; ++i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = IntPoly(std::vector<BigInt>{1, 0, q});
    for (const auto& [u, v] : g.edges) {
        m.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) -= IntPoly::monomial(1, 1);
        m.at(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) -= IntPoly::monomial(1, 1);
    }
    const long excess = static_cast<long>(g.edges.size()) - g.vertex_count;
    return RationalFunction(IntPoly(1), IntPoly::one_minus(1, 2).pow(static_cast<unsigned>(excess)) * det_poly(m));
}

}  // namespace

TEST_SUITE("graph-baseline") {

TEST_CASE("edge adjacency examples") {
    const SparseOperator c5 = edge_adjacency(cycle_graph(5));
    for (std::size_t i = 0; i < c5.rows(); ++i) CHECK(c5.row_sum(i) == 1);
    CHECK(c5.transpose().triplets().size() == 10);
    CHECK(c5.trace_powers(5)[5] == 10);
    const SparseOperator k4 = edge_adjacency(complete_graph(4));
    for (std::size_t i = 0; i < k4.rows(); ++i) CHECK(k4.row_sum(i) == 2);
    Graph single;
    single.vertex_count = 2;
    single.edges = {{0, 1}};
    CHECK(edge_adjacency(single).nnz() == 0);
}

TEST_CASE("ihara zeta of the 5-cycle") {
    const IharaReport r = ihara_zeta(cycle_graph(5));
    CHECK(r.agree);
    CHECK(r.hashimoto == RationalFunction(IntPoly(1), IntPoly::one_minus(1, 5).pow(2)));
}

TEST_CASE("hashimoto and regular forms on K4, Petersen and random cubic graphs") {
    std::vector<Graph> gs{complete_graph(4), petersen_graph(), joined_k4_pair()};
    for (std::uint64_t s = 0; s < 10; ++s) gs.push_back(random_regular_graph(8 + 2 * static_cast<int>(s), 3, s));
    for (const Graph& g : gs) {
        const IharaReport r = ihara_zeta(g);
        CHECK(r.agree);
        CHECK(r.hashimoto == regular_form(g, 2));
        CHECK(r.chi == g.vertex_count - static_cast<long>(g.edges.size()));
    }
    CHECK(ihara_zeta(complete_graph(4)).chi == -2);
}

TEST_CASE("bass form on irregular graphs") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = random_irregular_graph(8 + static_cast<int>(s), 2 + static_cast<int>(s % 5), s);
        const auto d = g.degrees();
        CHECK(*std::min_element(d.begin(), d.end()) >= 2);
        CHECK(ihara_zeta(g).agree);
    }
}

TEST_CASE("walk counts equal traces") {
    std::vector<Graph> gs{complete_graph(4), petersen_graph(), cycle_graph(5), random_regular_graph(12, 3, 4), random_irregular_graph(9, 3, 2)};
    Graph loops;
    loops.vertex_count = 2;
    loops.edges = {{0, 0}, {0, 1}, {1, 1}, {0, 1}};
    gs.push_back(loops);
    for (const Graph& g : gs) {
        const auto tr = edge_adjacency(g).trace_powers(8);
        for (int n = 1; n <= 8; ++n) CHECK(as_big(count_Nn(g, n)) == tr[static_cast<std::size_t>(n)]);
    }
    CHECK(count_Nn(cycle_graph(5), 5) == 10);
    CHECK(count_Nn(complete_graph(4), 3) == 24);
    Graph tree;
    tree.vertex_count = 4;
    tree.edges = {{0, 1}, {1, 2}, {1, 3}};
    for (int n = 1; n <= 6; ++n) CHECK(count_Nn(tree, n) == 0);
    CHECK_THROWS_AS(count_Nn(petersen_graph(), 8, 50), Error);
}

TEST_CASE("ramanujan verdicts") {
    const GraphRamanujanReport k4 = ramanujan_graph_check(complete_graph(4));
    CHECK(k4.ramanujan);
    for (double x : k4.nontrivial) CHECK(std::fabs(x + 1) < 1e-9);
    const GraphRamanujanReport pet = ramanujan_graph_check(petersen_graph());
    CHECK(pet.ramanujan);
    CHECK(pet.poles_on_circle);
    for (double x : pet.nontrivial) CHECK((std::fabs(x - 1) < 1e-9 || std::fabs(x + 2) < 1e-9));
    const GraphRamanujanReport neck = ramanujan_graph_check(necklace_graph(10));
    CHECK(!neck.ramanujan);
    CHECK(!neck.poles_on_circle);
    // bipartite: both trivial eigenvalues removed
    const GraphRamanujanReport k33 = ramanujan_graph_check(parse_graph("graph v1\nvertices 6\nedge 0 3\nedge 0 4\nedge 0 5\nedge 1 3\nedge 1 4\nedge 1 5\nedge 2 3\nedge 2 4\nedge 2 5\n"));
    CHECK(k33.nontrivial.size() == 4);
    CHECK(k33.ramanujan);
    CHECK(k33.poles_on_circle);
}

TEST_CASE("spectral verdict matches the pole criterion") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const GraphRamanujanReport r = ramanujan_graph_check(random_regular_graph(10 + 2 * static_cast<int>(s), 3, s + 100));
        CHECK(r.ramanujan == r.poles_on_circle);
    }
    for (int beads = 2; beads <= 8; ++beads) {
        const GraphRamanujanReport r = ramanujan_graph_check(necklace_graph(beads));
        CHECK(r.ramanujan == r.poles_on_circle);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(ramanujan_graph_check(random_irregular_graph(8, 2, 1)), Error);
    CHECK_THROWS_AS(ramanujan_graph_check(cycle_graph(6)), Error);
    Graph pendant = cycle_graph(4);
    pendant.vertex_count = 5;
    pendant.edges.emplace_back(0, 4);
    try {
        ihara_zeta(pendant);
        FAIL("expected DegreeTooLow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooLow);
    }
    CHECK_THROWS_AS(random_regular_graph(5, 3, 0), Error);
}

TEST_CASE("graph file round trip and parse errors") {
    const Graph g = petersen_graph();
    const Graph h = parse_graph(serialize_graph(g));
    CHECK(h.vertex_count == g.vertex_count);
    CHECK(h.edges == g.edges);
    CHECK_THROWS_AS(parse_graph("graph v2\nvertices 2\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph v1\nvertices 2\nedge 0 2\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph v1\nedge 0 1\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph v1\nvertices 2\nedge 0 x\n"), Error);
}

TEST_CASE("generators are seeded and well formed") {
    CHECK(random_regular_graph(20, 3, 5).edges == random_regular_graph(20, 3, 5).edges);
    const Graph g = random_regular_graph(20, 3, 5);
    CHECK(g.is_connected());
    for (int d : g.degrees()) CHECK(d == 3);
    for (int d : necklace_graph(5).degrees()) CHECK(d == 3);
    for (int d : joined_k4_pair().degrees()) CHECK(d == 3);
}

}
