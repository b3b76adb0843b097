#include "a2zeta/field.hpp"

#include <string>

#include "a2zeta/errors.hpp"

namespace a2zeta {
namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducible modulus, low-order coefficient first, leading 1 omitted.
struct Extension {
    int q, p, k;
    std::vector<int> modulus;
};

const Extension* extension_for(int q) {
    // x^2+x+1 over F2, x^3+x+1 over F2, x^2+1 over F3
    static const Extension table[] = {
        {4, 2, 2, {1, 1}},
        {8, 2, 3, {1, 1, 0}},
        {9, 3, 2, {1, 0}},
    };
    for (const auto& e : table)
        if (e.q == q) return &e;
    return nullptr;
}

std::vector<int> digits(int a, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

}  // namespace

bool FiniteField::is_supported(int q) {
    return (is_prime(q) && q <= 251) || extension_for(q) != nullptr;
}

FiniteField::FiniteField(int q) : q_(q) {
    if (!is_supported(q)) fail(ErrorKind::UnsupportedOrder, "no field table for q = " + std::to_string(q));
    const std::size_t n = static_cast<std::size_t>(q) * q;
    add_.resize(n);
    mul_.resize(n);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (const Extension* ext = extension_for(q)) {
        p_ = ext->p;
        const int k = ext->k;
        for (int a = 0; a < q; ++a) {
            const auto da = digits(a, p_, k);
            for (int b = 0; b < q; ++b) {
                const auto db = digits(b, p_, k);
                std::vector<int> s(k);
                for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[idx(a, b)] = from_digits(s, p_);

                std::vector<int> prod(2 * k - 1, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                // x^k = -(modulus)
                for (int d = 2 * k - 2; d >= k; --d) {
                    const int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k; ++i)
                        prod[d - k + i] = ((prod[d - k + i] - c * ext->modulus[i]) % p_ + p_) % p_;
                }
                prod.resize(k);
                mul_[idx(a, b)] = from_digits(prod, p_);
            }
        }
    } else {
        p_ = q;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[idx(a, b)] = (a + b) % q;
                mul_[idx(a, b)] = (a * b) % q;
            }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add_[idx(a, b)] == 0) neg_[a] = b;
            if (mul_[idx(a, b)] == 1) inv_[a] = b;
        }
}

}  // namespace a2zeta
