#include "a2zeta/satake.hpp"

#include <sstream>

#include "a2zeta/errors.hpp"

namespace a2zeta {

SymPoly::SymPoly(const BigRat& constant) { add_term({0, 0}, constant); }

SymPoly SymPoly::monomial(int a, int b, int c, const BigRat& coeff) {
    SymPoly p;
    p.add_term({a - c, b - c}, coeff);
    return p;
}

void SymPoly::add_term(const Key& k, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRat SymPoly::coeff(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRat(0) : it->second;
}

bool SymPoly::is_symmetric() const {
    // generators of S3 on keys: swap z1, z2 and the cycle z1 -> z2 -> z3 -> z1
    for (const auto& [k, c] : terms_) {
        const auto [i, j] = k;
        if (coeff(j, i) != c) return false;
        // z1^i z2^j -> z2^i z3^j = z1^{-j} z2^{i-j}
        if (coeff(-j, i - j) != c) return false;
    }
    return true;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*z1^" << k.first << "*z2^" << k.second;
    }
    return os.str();
}

SymPoly sigma(int k, int kind) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "sigma degree must be nonnegative");
    SymPoly s;
    if (k == 0) return s;
    switch (kind) {
    case 1:
        s += SymPoly::monomial(k, 0, 0) + SymPoly::monomial(0, k, 0) + SymPoly::monomial(0, 0, k);
        break;
    case 2:
        for (int a = 1; a <= k - 1; ++a)
            s += SymPoly::monomial(a, k - a, 0) + SymPoly::monomial(0, a, k - a) + SymPoly::monomial(k - a, 0, a);
        break;
    case 3:
        for (int a = 1; a <= k; ++a)
            for (int b = 1; a + b < k; ++b) s += SymPoly::monomial(a, b, k - a - b);
        break;
    default: fail(ErrorKind::InvalidArgument, "sigma kind must be 1, 2 or 3");
    }
    return s;
}

namespace {

BigRat power(long base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return BigRat(r);
}

void require_k(int k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "Satake degree must be at least 1");
}

}  // namespace

SymPoly satake_Tk(int q, int k) {
    require_k(k);
    const BigRat q3 = power(q, 3);
    return (sigma(k, 1) + sigma(k, 2) + sigma(k, 3) * ((q3 - 1) / q3)) * power(q, k);
}

SymPoly satake_Tk0(int q, int k) {
    require_k(k);
    const BigRat qq(q);
    return (sigma(k, 1) + sigma(k, 2) * ((qq - 1) / qq) + sigma(k, 3) * ((qq - 1) * (qq - 1) / (qq * qq))) * power(q, k);
}

SymPoly satake_A1(int q) { return satake_Tk(q, 1); }

SymPoly satake_A2(int q) { return sigma(2, 2) * BigRat(q); }

SatakeCheck verify_sigma3_identity(int order) {
    SatakeCheck c;
    SymSeries h(static_cast<std::size_t>(order) + 1);
    h[0] = SymPoly(1);
    for (int k = 1; k <= order; ++k) h[static_cast<std::size_t>(k)] = sigma(k, 1) + sigma(k, 2);
    c.pass = true;
    for (int k = 0; k <= order; ++k) {
        const SymPoly left = sigma(k, 3);
        SymPoly right;
        for (int j = 3; j <= k; j += 3) right += h[static_cast<std::size_t>(k - j)];
        c.symmetric = c.symmetric && left.is_symmetric() && right.is_symmetric();
        c.residual.push_back(left - right);
        c.pass = c.pass && c.residual.back().is_zero();
    }
    c.pass = c.pass && c.symmetric;
    return c;
}

RecursionCheck verify_recursion_42(int q, int order) {
    RecursionCheck c;
    const BigRat qq(q);
    const BigRat r = BigRat((q + 1) * (q - 1) * (q - 1), 3);
    const BigRat cubic = (qq - 1) * (qq * qq - 1);
    SymSeries tk(static_cast<std::size_t>(order) + 1), tk0(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) {
        tk[static_cast<std::size_t>(k)] = satake_Tk(q, k);
        tk0[static_cast<std::size_t>(k)] = satake_Tk0(q, k);
        c.symmetric = c.symmetric && tk[static_cast<std::size_t>(k)].is_symmetric() && tk0[static_cast<std::size_t>(k)].is_symmetric();
    }
    // (1 - q^2 u^3)/(1 - u^3) = 1 + (1 - q^2)(u^3 + u^6 + ...)
    auto ratio = [&](int i) -> BigRat { return i == 0 ? BigRat(1) : (i % 3 == 0 ? 1 - qq * qq : BigRat(0)); };
    c.pass = true;
    bool plus_ok = true;
    for (int k = 0; k <= order; ++k) {
        SymPoly lhs = tk0[static_cast<std::size_t>(k)] * qq;
        for (int j = 1; j <= k; ++j) lhs -= tk[static_cast<std::size_t>(j)] * (ratio(k - j) * (qq - 1));
        const SymPoly power_sum = sigma(k, 1) * power(q, k);
        const bool cube = k >= 3 && k % 3 == 0;
        const SymPoly log_side = power_sum - SymPoly(cube ? 3 * r : BigRat(0));
        const SymPoly closed = power_sum - SymPoly(cube ? cubic : BigRat(0));
        const SymPoly closed_plus = power_sum + SymPoly(cube ? cubic : BigRat(0));
        c.residual_log.push_back(lhs - log_side);
        c.residual_closed.push_back(lhs - closed);
        plus_ok = plus_ok && (lhs - closed_plus).is_zero();
        c.symmetric = c.symmetric && lhs.is_symmetric();
        c.pass = c.pass && c.residual_log.back().is_zero() && c.residual_closed.back().is_zero();
        c.lhs.push_back(std::move(lhs));
    }
    c.plus_sign_matches = plus_ok && order >= 3;
    c.pass = c.pass && c.symmetric;
    return c;
}

bool verify_vertex_factorization(int q) {
    const BigRat qq(q);
    // coefficients of u^0..u^3 on both sides
    const std::vector<SymPoly> lhs{SymPoly(1), satake_A1(q) * BigRat(-1), satake_A2(q) * qq, SymPoly(-qq * qq * qq)};
    std::vector<SymPoly> rhs{SymPoly(1)};
    for (int i = 0; i < 3; ++i) {
        const SymPoly factor = SymPoly::monomial(i == 0, i == 1, i == 2, -qq);
        std::vector<SymPoly> next(rhs.size() + 1);
        for (std::size_t d = 0; d < rhs.size(); ++d) {
            next[d] += rhs[d];
            next[d + 1] += rhs[d] * factor;
        }
        rhs = std::move(next);
    }
    return lhs == rhs;
}

}  // namespace a2zeta
