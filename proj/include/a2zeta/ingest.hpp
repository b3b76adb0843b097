#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/field.hpp"

namespace a2zeta {

/// PG(2, q). Points and lines are normalized coordinate triples (first
/// nonzero coordinate 1) sorted lexicographically in the field's element
/// order; point p lies on line l iff their dot product vanishes.
struct ProjectivePlane {
    int q = 0;
    FiniteField field{2};
    std::vector<std::array<int, 3>> points;
    std::vector<std::array<int, 3>> lines;
    /// Point ids on each line, ascending.
    std::vector<std::vector<int>> line_points;
    /// Line ids through each point, ascending.
    std::vector<std::vector<int>> point_lines;

    std::size_t size() const noexcept { return points.size(); }
    bool incident(int point, int line) const { return incidence_[static_cast<std::size_t>(point) * size() + static_cast<std::size_t>(line)] != 0; }
    /// The unique line through two distinct points.
    int line_through(int a, int b) const;

    std::vector<std::uint8_t> incidence_;
};

/// Throws UnsupportedOrder unless q is a supported prime power.
ProjectivePlane build_plane(int q);

/// Checks the axioms (counts, q+1 incidences, unique joining line and
/// unique meeting point); returns an empty string on success.
std::string check_plane_axioms(const ProjectivePlane& plane);

/// Point-line bijection lambda together with a triple set T over a plane.
struct TrianglePresentation {
    int q = 0;
    /// lambda[point] = line id.
    std::vector<int> lambda;
    /// Sorted ascending.
    std::vector<std::array<int, 3>> triples;

    friend bool operator==(const TrianglePresentation&, const TrianglePresentation&) = default;
};

/// Throws PresentationInvalid naming the first violated invariant.
void check_presentation(const ProjectivePlane& plane, const TrianglePresentation& tp);

struct SearchOptions {
    std::size_t limit = 1;
    std::uint64_t seed = 0;
    /// Worker threads over first-branch choices; results are merged in branch order.
    unsigned jobs = 1;
    /// Abort after this many search nodes (0 = unbounded); partial results are returned.
    std::uint64_t node_budget = 0;
};

/// Backtracking search over (lambda, T); deterministic for fixed options.
std::vector<TrianglePresentation> search_triangle_presentations(const ProjectivePlane& plane, const SearchOptions& opts);

/// Three-vertex typed complex: one edge v_i -> v_{i+1} labelled x for every
/// point x and i in Z/3, one chamber (x: v0->v1, y: v1->v2, z: v2->v0) per
/// triple. Edge id of (x, i) is 3x + i.
TypedComplex complex_from_presentation(const ProjectivePlane& plane, const TrianglePresentation& tp);

TypedComplex parse_complex(std::string_view text);
std::string serialize_complex(const TypedComplex& complex);

TrianglePresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const TrianglePresentation& tp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace a2zeta
