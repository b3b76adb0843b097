#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "a2zeta/complex.hpp"

namespace a2zeta {

struct OracleOptions {
    /// ResourceLimit once this many DFS nodes have been visited in total.
    std::uint64_t node_budget = 10'000'000;
    /// Worker threads over the first element; totals do not depend on it.
    unsigned jobs = 1;
};

/// Based closed type-1 edge sequences of length n whose consecutive pairs
/// (wrap-around included) chain head to tail and are not two sides of one chamber.
std::uint64_t count_type1_geodesics(const TypedComplex& complex, int length, const OracleOptions& opts = {});

/// Based closed directed-chamber sequences of length L under the gallery step rule.
std::uint64_t count_galleries(const TypedComplex& complex, int length, const OracleOptions& opts = {});

using Gallery = std::vector<DirectedChamber>;

/// All based closed galleries of length L in lexicographic order.
std::vector<Gallery> enumerate_galleries(const TypedComplex& complex, int length, const OracleOptions& opts = {});

/// Throws NotAGallery unless g is a closed gallery of length divisible by 3.
/// Even length: the two cycles of odd- and even-position distinguished
/// edges. Odd length: the single cycle e1, e3, ..., e_L, e2, e4, ..., e_{L-1}.
std::vector<std::vector<int>> gallery_boundary(const TypedComplex& complex, const Gallery& g);

struct BoundaryReport {
    bool pass = false;
    std::size_t galleries = 0;
    std::size_t cycles = 0;
    std::string detail;
};

/// Enumerates every closed gallery of length L and checks that each boundary
/// has the mandated number and length of cycles, that every cycle is closed
/// under L_E, and that shifting the gallery by one chamber only permutes and
/// rotates its boundary cycles.
BoundaryReport check_gallery_boundaries(const TypedComplex& complex, int length, const OracleOptions& opts = {});

}  // namespace a2zeta
