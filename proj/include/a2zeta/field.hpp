#pragma once

#include <cstdint>
#include <vector>

namespace a2zeta {

/// Finite field F_q given by addition and multiplication tables.
///
/// Elements are the integers 0..q-1. For a prime q they are the residues
/// themselves; for q = p^k (4, 8, 9) the element with base-p digits
/// (d0, d1, ...) is the class of d0 + d1 x + ... modulo a fixed irreducible
/// polynomial. This integer order is the canonical element order used by
/// every deterministic construction (plane points, coset representatives).
class FiniteField {
public:
    /// Throws UnsupportedOrder unless q is a prime <= 251 or one of 4, 8, 9.
    explicit FiniteField(int q);

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[a]; }
    /// Multiplicative inverse; a must be nonzero.
    int inv(int a) const { return inv_[a]; }

    static bool is_supported(int q);

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

    int q_;
    int p_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
};

}  // namespace a2zeta
