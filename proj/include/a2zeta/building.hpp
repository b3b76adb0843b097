#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/field.hpp"
#include "a2zeta/poly.hpp"

namespace a2zeta {

/// Polynomial in t over F_q: coefficient list, index = degree, no trailing zeros.
using TPoly = std::vector<int>;

/// 3x3 matrix over F_q[t], row-major.
using Mat3 = std::array<TPoly, 9>;

/// Arithmetic in F_q[t] and on 3x3 matrices over it.
class TPolyRing {
public:
    explicit TPolyRing(int q) : field_(q) {}

    const FiniteField& field() const noexcept { return field_; }

    TPoly add(const TPoly& a, const TPoly& b) const;
    TPoly sub(const TPoly& a, const TPoly& b) const;
    TPoly mul(const TPoly& a, const TPoly& b) const;
    TPoly scale(const TPoly& a, int c) const;
    /// Lowest degree with a nonzero coefficient; -1 for zero.
    static int valuation(const TPoly& a);
    static TPoly truncate(TPoly a, int degree_bound);
    /// a / t^k, a must be divisible.
    static TPoly shift_down(const TPoly& a, int k);
    static TPoly monomial(int c, int k);
    /// Inverse of a unit power series modulo t^bound.
    TPoly unit_inverse(const TPoly& a, int bound) const;

    Mat3 mat_mul(const Mat3& a, const Mat3& b) const;
    TPoly det(const Mat3& a) const;
    Mat3 adjugate(const Mat3& a) const;
    /// Minimal valuations over the 1x1, 2x2 and 3x3 minors (-1 where all vanish).
    std::array<int, 3> minor_valuations(const Mat3& a) const;

    /// Terms like `1+t^2`, `2t^3`, `t`, `-t`, `3*t^2`; coefficients are field element codes.
    TPoly parse(std::string_view text) const;
    std::string format(const TPoly& a) const;

private:
    FiniteField field_;
};

/// Vertex of the building as the canonical column-Hermite basis of a
/// lattice class: upper triangular with diagonal t^{a_i} and off-diagonal
/// entries in row i of degree < a_i. The representative lattice is
/// minimally integral (contained in O^3 but not in tO^3).
struct BuildingVertex {
    std::array<int, 3> a{0, 0, 0};
    TPoly x01, x02, x12;

    friend bool operator==(const BuildingVertex&, const BuildingVertex&) = default;
    friend auto operator<=>(const BuildingVertex&, const BuildingVertex&) = default;
    std::string key() const;
};

struct RelativePosition {
    int n = 0;
    int m = 0;

    int algebraic_length() const noexcept { return n + 2 * m; }
    int geometric_length() const noexcept { return n + m; }
    friend bool operator==(const RelativePosition&, const RelativePosition&) = default;
};

class BuildingModel {
public:
    /// Throws UnsupportedOrder for unsupported q.
    explicit BuildingModel(int q);

    int q() const noexcept { return q_; }
    const TPolyRing& ring() const noexcept { return ring_; }

    BuildingVertex base() const;
    /// Throws SingularInput if det g = 0.
    BuildingVertex canonicalize(const Mat3& g) const;
    Mat3 matrix(const BuildingVertex& v) const;
    /// Sum of the diagonal exponents mod 3.
    int type(const BuildingVertex& v) const;

    /// The q^2+q+1 coset representatives for type-1 or type-2 edges.
    const std::vector<Mat3>& coset_representatives(int type) const;
    std::vector<BuildingVertex> neighbors(const BuildingVertex& v, int type) const;

    RelativePosition relative_position(const BuildingVertex& g1, const BuildingVertex& g2) const;
    /// Relative position of g1 K and g2 K for arbitrary nonsingular matrices.
    RelativePosition relative_position(const Mat3& g1, const Mat3& g2) const;
    /// Position of the coset M K relative to the base vertex.
    RelativePosition position_of(const Mat3& m) const;

    /// Sum of eigenvalue valuations minus three times the smallest one, read
    /// off the Newton polygon of the characteristic polynomial.
    BigRat canonical_algebraic_length(const Mat3& m) const;

    /// Three lines of three whitespace-separated polynomials in t.
    Mat3 parse_matrix(std::string_view text) const;
    std::string format_vertex(const BuildingVertex& v) const;

    static Mat3 identity();

private:
    int q_;
    TPolyRing ring_;
    std::vector<Mat3> reps1_, reps2_;
};

/// Vertices within geometric distance r of the base, in BFS order with
/// neighbors in coset-representative order.
struct Ball {
    int q = 0;
    int radius = 0;
    std::vector<BuildingVertex> vertices;
    std::vector<int> distance;
    /// nbr[type-1][i]: neighbor indices, filled for vertices with distance < radius.
    std::array<std::vector<std::vector<int>>, 2> nbr;
    std::unordered_map<std::string, int> index;

    /// -1 if absent.
    int index_of(const BuildingVertex& v) const;
    std::vector<std::size_t> sphere_sizes() const;
};

inline constexpr std::size_t kDefaultBallCap = 4'000'000;

/// r in [0, 5]; ResourceLimit if more than `cap` vertices would be stored.
Ball build_ball(const BuildingModel& model, int radius, std::size_t cap = kDefaultBallCap);

/// Link of the base vertex (type-1 neighbors vs type-2 neighbors, joined
/// when they span a chamber with the base) as a projective-plane check.
LinkCheck base_link_check(const BuildingModel& model, const Ball& ball);

struct TamagawaReport {
    bool pass = false;
    std::size_t vertices_checked = 0;
    /// Truncated (Sum T_{n,m} u^{n+2m}) Y delta at the base.
    IntPoly base_value;
    std::string detail;
};

/// Checks (Sum_{n+2m<=N} T_{n,m} u^{n+2m})(I - A1 u + q A2 u^2 - q^3 u^3 I) delta
/// = (1-u^3) delta up to degree N at every ball vertex. BallTooSmall unless r >= N+1.
TamagawaReport verify_tamagawa(const BuildingModel& model, const Ball& ball, int order);
TamagawaReport verify_tamagawa(int q, int order, int radius);

struct GeodesicReport {
    bool pass = false;
    std::size_t paths = 0;
    std::size_t targets = 0;
    std::size_t expected = 0;
    std::string detail;
};

/// Non-chamber type-1 paths of length n from the base versus the vertices at
/// relative position (n, 0). BallTooSmall unless r >= n.
GeodesicReport verify_geodesic_criterion(const BuildingModel& model, const Ball& ball, int length);
GeodesicReport verify_geodesic_criterion(int q, int length, int radius);

}  // namespace a2zeta
