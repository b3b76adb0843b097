#include "a2zeta/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "a2zeta/errors.hpp"

namespace a2zeta {
namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus(const BigInt& c, std::size_t k) {
    return IntPoly(1) - monomial(c, k);
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::substitute_power(unsigned k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<BigInt> v(static_cast<std::size_t>(degree()) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    IntPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool IntPoly::only_powers_of(unsigned k) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (i % k != 0 && c_[i] != 0) return false;
    return true;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& s) {
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    os << "poly " << degree() << ":";
    for (const auto& c : c_) os << ' ' << c.get_str();
    return os.str();
}

IntPoly IntPoly::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string word;
    if (!(is >> word) || word != "poly") fail(ErrorKind::Parse, "expected 'poly <deg>:'");
    std::string deg_token;
    is >> deg_token;
    if (deg_token.empty() || deg_token.back() != ':') fail(ErrorKind::Parse, "expected '<deg>:'");
    long deg = 0;
    try {
        deg = std::stol(deg_token.substr(0, deg_token.size() - 1));
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad degree '" + deg_token + "'");
    }
    std::vector<BigInt> v;
    std::string tok;
    while (is >> tok) {
        BigInt c;
        if (c.set_str(tok, 10) != 0) fail(ErrorKind::Parse, "bad coefficient '" + tok + "'");
        v.push_back(c);
    }
    if (static_cast<long>(v.size()) != deg + 1) fail(ErrorKind::Parse, "coefficient count does not match degree");
    IntPoly p(std::move(v));
    if (p.degree() != deg) fail(ErrorKind::Parse, "leading coefficient is zero");
    return p;
}

std::string IntPoly::pretty(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_quotient: division by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const BigInt& lb = b.coeffs().back();
    std::vector<BigInt> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

namespace {

// lc(b)^k * a mod b, computed one leading term at a time.
IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
    const int db = b.degree();
    const BigInt& lb = b.coeffs().back();
    while (!r.is_zero() && r.degree() >= db) {
        const BigInt lr = r.coeffs().back();
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        r *= lb;
        r -= IntPoly::monomial(lr, shift) * b;
    }
    return r;
}

IntPoly must_divide(const IntPoly& a, const IntPoly& b) {
    auto q = exact_quotient(a, b);
    if (!q) throw std::logic_error("expected exact polynomial division");
    return *q;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.degree() <= 0) return out;
    const IntPoly dp = p.derivative();
    const IntPoly a0 = gcd(p, dp);
    IntPoly b = must_divide(p, a0);
    IntPoly c = must_divide(dp, a0);
    IntPoly d = c - b.derivative();
    while (b.degree() > 0) {
        IntPoly f = gcd(b, d);
        out.push_back(f);
        b = must_divide(b, f);
        c = must_divide(d, f);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() <= 0) out.pop_back();
    return out;
}

int PolyMatrix::max_degree() const {
    int d = 0;
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
    if (den.is_zero()) fail(ErrorKind::InvalidArgument, "zero denominator");
    if (num.is_zero()) {
        num_ = IntPoly{};
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = gcd(num, den);
    if (g.degree() > 0 || g.coeffs().back() != 1) {
        num = must_divide(num, g);
        den = must_divide(den, g);
    }
    // remaining scalar common factor
    BigInt c = 0;
    mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (c > 1) {
        num = must_divide(num, IntPoly(std::vector<BigInt>{c}));
        den = must_divide(den, IntPoly(std::vector<BigInt>{c}));
    }
    const BigInt& d0 = den.coeff(0);
    if (d0 == -1) {
        num = -num;
        den = -den;
    } else if (d0 != 1) {
        fail(ErrorKind::InvalidArgument, "denominator constant term is not a unit: " + d0.get_str());
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::substitute_power(unsigned k) const {
    return RationalFunction(num_.substitute_power(k), den_.substitute_power(k));
}

RationalFunction RationalFunction::negate_variable() const {
    return RationalFunction(num_.negate_variable(), den_.negate_variable());
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(den_, num_); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Series::Series(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
}

Series Series::from_poly(const IntPoly& p, std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
    return s;
}

Series Series::quotient(const IntPoly& num, const IntPoly& den, std::size_t order) {
    if (den.coeff(0) == 0) fail(ErrorKind::InvalidArgument, "series quotient needs den(0) != 0");
    Series s(order);
    const BigRat d0(den.coeff(0));
    for (std::size_t k = 0; k <= order; ++k) {
        BigRat acc(num.coeff(k));
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0)));
        for (std::size_t j = 1; j <= top; ++j) {
            if (den.coeff(j) == 0) continue;
            acc -= BigRat(den.coeff(j)) * s.c_[k - j];
        }
        s.c_[k] = acc / d0;
    }
    return s;
}

Series& Series::operator+=(const Series& o) {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) c_[i] -= o.c_[i];
    return *this;
}

Series& Series::operator*=(const BigRat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    Series r(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

bool Series::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

bool Series::is_nonnegative_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRat& c) { return c.get_den() == 1 && c >= 0; });
}

std::string Series::to_string() const {
    std::ostringstream os;
    os << "series " << order() << ":";
    for (const auto& c : c_) os << ' ' << c.get_str();
    return os.str();
}

Series log_derivative(const IntPoly& p, std::size_t order) {
    return Series::quotient(IntPoly::monomial(1, 1) * p.derivative(), p, order);
}

Series series_log_derivative(const RationalFunction& r, std::size_t order) {
    if (r.num().is_zero()) fail(ErrorKind::InvalidArgument, "log derivative of zero");
    return log_derivative(r.num(), order) - log_derivative(r.den(), order);
}

Series newton_power_sums(const IntPoly& p, std::size_t order) {
    if (p.coeff(0) != 1) fail(ErrorKind::InvalidArgument, "det(I - Xu) must have constant term 1");
    // p_k = -k a_k - sum_{i=1}^{k-1} a_i p_{k-i}
    std::vector<BigInt> ps(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        BigInt acc = -p.coeff(k) * static_cast<unsigned long>(k);
        for (std::size_t i = 1; i < k; ++i) mpz_submul(acc.get_mpz_t(), p.coeff(i).get_mpz_t(), ps[k - i].get_mpz_t());
        ps[k] = acc;
    }
    Series s(order);
    for (std::size_t k = 1; k <= order; ++k) s[k] = ps[k];
    return s;
}

}  // namespace a2zeta
