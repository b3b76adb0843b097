#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a2zeta/det.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/poly.hpp"

namespace a2zeta {

/// Finite undirected multigraph. Edge i yields directed edges 2i (u -> v)
/// and 2i+1 (v -> u).
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    bool is_connected() const;
};

/// `graph v1`, `vertices <n>`, then `edge <u> <v>` lines.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Vertex adjacency with multiplicities (a loop contributes 2).
SparseOperator graph_adjacency(const Graph& g);

/// Hashimoto operator: (u -> v) feeds (v -> w) unless the second is the reverse of the first.
SparseOperator edge_adjacency(const Graph& g);

struct IharaReport {
    /// det(I - A_e u)
    IntPoly hashimoto_det;
    /// det(I - A u + (D - I) u^2)
    IntPoly bass_det;
    /// V - E
    long chi = 0;
    /// 1 / det(I - A_e u)
    RationalFunction hashimoto;
    /// (1-u^2)^chi / det(I - A u + (D - I) u^2)
    RationalFunction bass;
    bool agree = false;
};

/// DegreeTooLow if some vertex has degree < 2; InvalidArgument if disconnected.
IharaReport ihara_zeta(const Graph& g, const DetOptions& opts = {});

/// Closed non-backtracking walks of length n whose wrap-around step also does
/// not backtrack, counted with a distinguished start (DFS, no matrices).
std::uint64_t count_Nn(const Graph& g, int length, std::uint64_t node_budget = 10'000'000);

struct GraphRamanujanReport {
    int q = 0;
    /// Eigenvalues of A, ascending.
    std::vector<double> eigenvalues;
    /// After removing one q+1 and, if present, one -(q+1).
    std::vector<double> nontrivial;
    double bound = 0;
    bool ramanujan = false;
    /// All nontrivial poles of 1/det(I - A_e u) have |u| = q^{-1/2} within tol.
    bool poles_on_circle = false;
};

/// NotRegular unless every vertex has the same degree q+1 >= 3.
GraphRamanujanReport ramanujan_graph_check(const Graph& g, double tol = 1e-6);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
/// Two copies of K4 with one edge removed from each, joined by two cross edges: 3-regular.
Graph joined_k4_pair();
/// k >= 2 copies of K4 minus an edge joined in a ring through their degree-2
/// vertices: 3-regular, with second eigenvalue tending to 3.
Graph necklace_graph(int beads);
/// Seeded pairing model with rejection; simple and connected.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);
/// The cycle C_n plus `chords` distinct random chords; simple, connected, min degree 2.
Graph random_irregular_graph(int n, int chords, std::uint64_t seed);

}  // namespace a2zeta
