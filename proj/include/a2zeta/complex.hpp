#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace a2zeta {

/// Directed type-1 edge.
struct Edge {
    int src = 0;
    int dst = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge ids (a, b, c) of a closed triangle: dst(a)=src(b), dst(b)=src(c), dst(c)=src(a).
using ChamberEdges = std::array<int, 3>;

/// Finite (q+1)-regular typed 2-dimensional multicomplex: the model of a
/// finite quotient of the building. Parallel edges and repeated vertex
/// triples are allowed; edges and chambers are identified by their ids.
///
/// Construction only checks that ids are in range (IndexOutOfRange) and
/// normalizes each chamber to its lexicographically least rotation; all
/// building axioms are checked by validate().
class TypedComplex {
public:
    TypedComplex() = default;
    TypedComplex(int q, std::vector<int> vertex_type, std::vector<Edge> edges, std::vector<ChamberEdges> chambers);

    int q() const noexcept { return q_; }
    std::size_t vertex_count() const noexcept { return type_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t chamber_count() const noexcept { return chambers_.size(); }

    std::span<const int> vertex_types() const noexcept { return type_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const ChamberEdges> chambers() const noexcept { return chambers_; }
    const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
    const ChamberEdges& chamber(int id) const { return chambers_.at(static_cast<std::size_t>(id)); }

    /// Chamber ids containing each edge, ascending.
    const std::vector<std::vector<int>>& chambers_of_edge() const noexcept { return edge_chambers_; }

    friend bool operator==(const TypedComplex& a, const TypedComplex& b) {
        return a.q_ == b.q_ && a.type_ == b.type_ && a.edges_ == b.edges_ && a.chambers_ == b.chambers_;
    }

private:
    int q_ = 0;
    std::vector<int> type_;
    std::vector<Edge> edges_;
    std::vector<ChamberEdges> chambers_;
    std::vector<std::vector<int>> edge_chambers_;
};

/// A chamber together with one of its three type-1 edges (chamber[slot]).
struct DirectedChamber {
    int chamber = 0;
    int slot = 0;
    friend auto operator<=>(const DirectedChamber&, const DirectedChamber&) = default;
};

/// Chamber-major, slot-minor; index of (c, s) is 3c + s.
std::vector<DirectedChamber> directed_chambers(const TypedComplex& complex);

struct Check {
    std::string name;
    bool pass = true;
    /// Warnings are reported but do not fail validation.
    bool warning_only = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool ok() const;
    /// First failing non-warning check, or nullptr.
    const Check* first_failure() const;
    const Check* find(const std::string& name) const;
};

namespace check_names {
inline constexpr const char* kTypeRange = "vertex types in Z/3";
inline constexpr const char* kTypeIncrement = "type increment";
inline constexpr const char* kChamberClosure = "chamber closure";
inline constexpr const char* kOutDegree = "out-degree q^2+q+1";
inline constexpr const char* kInDegree = "in-degree q^2+q+1";
inline constexpr const char* kEdgeChambers = "edge lies in exactly q+1 chambers";
inline constexpr const char* kEdgeCount = "edge count V(q^2+q+1)";
inline constexpr const char* kChamberCount = "chamber count (q+1)(q^2+q+1)V/3";
inline constexpr const char* kLink = "link is a projective plane";
inline constexpr const char* kEuler = "euler characteristic formulas agree";
inline constexpr const char* kConnected = "connected";
}  // namespace check_names

ValidationReport validate(const TypedComplex& complex);

/// Throws ValidationFailure naming the first failing invariant.
void require_valid(const TypedComplex& complex);
/// require_valid plus connectivity (zeta computations refuse disconnected input).
void require_valid_connected(const TypedComplex& complex);

bool is_connected(const TypedComplex& complex);

/// V - E_undirected + C with E_undirected = V(q^2+q+1).
long euler_characteristic(const TypedComplex& complex);
/// (q+1)(q-1)^2 V / 3
long euler_characteristic_formula(int q, std::size_t vertex_count);

/// Outcome of the projective-plane test on a bipartite link graph.
struct LinkCheck {
    bool pass = true;
    std::string detail;
};

/// Bipartite graph with `left` and `right` vertex counts and the given
/// (left, right) edges is the incidence graph of a projective plane of order
/// q: both sides have q^2+q+1 vertices, every vertex has degree q+1, there
/// are no multiple edges, and any two distinct vertices on the same side
/// have exactly one common neighbour.
LinkCheck check_projective_link(std::size_t left, std::size_t right, const std::vector<std::pair<int, int>>& edges, int q);

}  // namespace a2zeta
