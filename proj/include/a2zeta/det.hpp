#pragma once

#include <cstdint>
#include <vector>

#include "a2zeta/poly.hpp"

namespace a2zeta {

/// Dense square integer matrix, row-major.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t size) : n(size), a(size * size) {}
    BigInt& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Fraction-free (Bareiss) elimination over Z.
BigInt det_bareiss(IntMatrix m);

/// Fraction-free (Bareiss) elimination over Z[u]; exact polynomial divisions.
IntPoly det_poly_bareiss(const PolyMatrix& m);

struct DetOptions {
    unsigned jobs = 1;
    /// Compare against det_poly_bareiss when the dimension is at most this.
    std::size_t cross_check_max_dim = 12;
};

/// Determinant by evaluation at the integers 0, 1, -1, 2, -2, ... (deg*dim+1
/// of them) followed by Newton interpolation. Evaluations and interpolation
/// run modulo a set of 62-bit primes whose product exceeds twice a rigorous
/// coefficient bound, and coefficients are lifted by CRT, so the result is
/// exact. For dim <= cross_check_max_dim the result is checked against
/// fraction-free elimination (std::logic_error on disagreement).
IntPoly det_poly(const PolyMatrix& m, const DetOptions& opts = {});

/// The interpolation route alone, without the cross-check.
IntPoly det_poly_interpolate(const PolyMatrix& m, unsigned jobs = 1);

/// Evaluation points used by det_poly: 0, 1, -1, 2, -2, ...
std::vector<long> interpolation_points(std::size_t count);

namespace modular {

/// Descending primes below 2^62, deterministic.
const std::vector<std::uint64_t>& primes(std::size_t count);
std::uint64_t det_mod(std::vector<std::uint64_t> m, std::size_t n, std::uint64_t p);

}  // namespace modular

}  // namespace a2zeta
