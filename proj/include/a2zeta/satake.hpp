#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "a2zeta/poly.hpp"

namespace a2zeta {

/// Laurent polynomial in z1, z2, z3 modulo z1 z2 z3 = 1, stored with z3
/// eliminated: z1^a z2^b z3^c is the key (a - c, b - c).
class SymPoly {
public:
    using Key = std::pair<int, int>;

    SymPoly() = default;
    SymPoly(const BigRat& constant);  // NOLINT(google-explicit-constructor)
    static SymPoly monomial(int a, int b, int c, const BigRat& coeff = 1);

    const std::map<Key, BigRat>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Invariant under all permutations of z1, z2, z3.
    bool is_symmetric() const;
    BigRat coeff(int i, int j) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const BigRat& s);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const BigRat& s) { return a *= s; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

    /// Sum of `c*z1^i*z2^j` terms in key order; `0` when empty.
    std::string to_string() const;

private:
    void add_term(const Key& k, const BigRat& c);
    std::map<Key, BigRat> terms_;
};

/// kind 1: z1^k + z2^k + z3^k; kind 2: sum over 1 <= a <= k-1 of
/// z1^a z2^(k-a) + z2^a z3^(k-a) + z3^a z1^(k-a); kind 3: sum of z1^a z2^b z3^c
/// with a, b, c >= 1 and a+b+c = k. All three vanish at k = 0.
SymPoly sigma(int k, int kind);

/// q^k (sigma_{k,1} + sigma_{k,2} + (q^3-1)/q^3 sigma_{k,3})
SymPoly satake_Tk(int q, int k);
/// q^k (sigma_{k,1} + (q-1)/q sigma_{k,2} + (q-1)^2/q^2 sigma_{k,3})
SymPoly satake_Tk0(int q, int k);
/// q (z1 + z2 + z3)
SymPoly satake_A1(int q);
/// q (z1 z2 + z2 z3 + z3 z1)
SymPoly satake_A2(int q);

/// Power series in u with SymPoly coefficients, index = degree.
using SymSeries = std::vector<SymPoly>;

struct SatakeCheck {
    bool pass = false;
    /// Per-degree difference of the two sides (all zero on pass).
    SymSeries residual;
    /// Every computed value was S3-symmetric.
    bool symmetric = true;
};

/// sum_{k>=1} sigma_{k,3} u^k = u^3/(1-u^3) [1 + sum_{k>=1} (sigma_{k,1} + sigma_{k,2}) u^k] up to degree N.
SatakeCheck verify_sigma3_identity(int order);

struct RecursionCheck {
    bool pass = false;
    /// q sum psi(T_{k,0}) u^k - (q-1) sum psi(T_k) u^k (1-q^2u^3)/(1-u^3)
    SymSeries lhs;
    /// lhs minus u d/du log[(1-u^3)^r / prod(1 - q z_i u)]
    SymSeries residual_log;
    /// lhs minus [sum_{k>=1} sigma_{k,1} (qu)^k - (q-1)(q^2-1) u^3/(1-u^3)]
    SymSeries residual_closed;
    /// Whether lhs also matches the closed form with the u^3 term added instead.
    bool plus_sign_matches = false;
    bool symmetric = true;
};

RecursionCheck verify_recursion_42(int q, int order);

/// psi(I - A1 u + q A2 u^2 - q^3 u^3 I) == (1 - q z1 u)(1 - q z2 u)(1 - q z3 u).
bool verify_vertex_factorization(int q);

}  // namespace a2zeta
