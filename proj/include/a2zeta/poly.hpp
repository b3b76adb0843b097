#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace a2zeta {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense polynomial in u with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(long constant);  // NOLINT(google-explicit-constructor)

    static IntPoly monomial(const BigInt& c, std::size_t degree);
    /// 1 - c u^k
    static IntPoly one_minus(const BigInt& c, std::size_t k);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Coefficient of u^i (zero past the degree).
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    BigInt evaluate(const BigInt& x) const;
    /// p(u^k)
    IntPoly substitute_power(unsigned k) const;
    /// p(-u)
    IntPoly negate_variable() const;
    IntPoly derivative() const;
    IntPoly pow(unsigned e) const;
    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    BigInt content() const;
    IntPoly primitive_part() const;
    /// True iff only monomials u^{k*m} occur.
    bool only_powers_of(unsigned k) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const BigInt& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// `poly <deg>: c0 c1 ... cdeg`; the zero polynomial prints as `poly -1:`.
    std::string to_string() const;
    static IntPoly parse(std::string_view text);
    /// Human-readable form such as `1 - 7*u + 14*u^2`.
    std::string pretty(char var = 'u') const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

/// Quotient a / b in Z[u] if b divides a exactly, otherwise nullopt.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS over Z).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun decomposition: factors[i] is squarefree and p = c * prod factors[i]^(i+1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Square matrix of polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    IntPoly& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    int max_degree() const;

private:
    std::size_t n_;
    std::vector<IntPoly> a_;
};

/// num/den with gcd(num, den) = 1 and den(0) = 1.
class RationalFunction {
public:
    RationalFunction() : num_(1), den_(1) {}
    /// Reduces; throws InvalidArgument if den(0) is not a unit after reduction.
    RationalFunction(IntPoly num, IntPoly den);

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }

    RationalFunction substitute_power(unsigned k) const;
    RationalFunction negate_variable() const;
    RationalFunction inverse() const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    IntPoly num_;
    IntPoly den_;
};

/// Truncated power series with exact rational coefficients c_0..c_order.
class Series {
public:
    explicit Series(std::size_t order = 0) : c_(order + 1) {}
    Series(std::vector<BigRat> coeffs);  // NOLINT(google-explicit-constructor)

    static Series from_poly(const IntPoly& p, std::size_t order);
    /// Expansion of num/den; den(0) must be nonzero.
    static Series quotient(const IntPoly& num, const IntPoly& den, std::size_t order);

    std::size_t order() const noexcept { return c_.size() - 1; }
    BigRat& operator[](std::size_t i) { return c_[i]; }
    const BigRat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<BigRat>& coeffs() const noexcept { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const BigRat& s);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const BigRat& s) { return a *= s; }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    bool is_integral() const;
    bool is_nonnegative_integral() const;
    std::string to_string() const;

private:
    std::vector<BigRat> c_;
};

/// u * d/du log p up to order N; p(0) must be nonzero.
Series log_derivative(const IntPoly& p, std::size_t order);
/// u * d/du log R up to order N.
Series series_log_derivative(const RationalFunction& r, std::size_t order);
/// Power sums Tr X^n for n = 1..N from p = det(I - X u) (entry 0 is left at 0).
Series newton_power_sums(const IntPoly& p, std::size_t order);

}  // namespace a2zeta
