#include "a2zeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "a2zeta/errors.hpp"
#include "a2zeta/roots.hpp"

namespace a2zeta {

PolyMatrix vertex_matrix(int q, const SparseOperator& a1, const SparseOperator& a2) {
    const std::size_t n = a1.rows();
    PolyMatrix m(n);
    const BigInt q3 = BigInt(q) * q * q;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly(std::vector<BigInt>{1, 0, 0, BigInt(-q3)});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : a1.row(i)) m.at(i, static_cast<std::size_t>(e.col)) += IntPoly::monomial(BigInt(-e.value), 1);
        for (const auto& e : a2.row(i)) m.at(i, static_cast<std::size_t>(e.col)) += IntPoly::monomial(BigInt(q * e.value), 2);
    }
    return m;
}

ZetaBundle zeta_bundle_from_operators(int q, long chi, const SparseOperator& a1, const SparseOperator& a2,
                                      const SparseOperator& le, const SparseOperator& lb, const DetOptions& opts) {
    ZetaBundle b;
    b.q = q;
    b.chi = chi;
    b.dvertex = det_poly(vertex_matrix(q, a1, a2), opts);
    b.pb = det_poly(lb.identity_plus(+1, 1), opts);
    b.pe = det_poly(le.identity_plus(-1, 1), opts);
    b.pe2 = b.pe.substitute_power(2);
    return b;
}

ZetaBundle zeta_bundle(const TypedComplex& cx, const DetOptions& opts) {
    require_valid_connected(cx);
    const auto h = vertex_hecke(cx);
    return zeta_bundle_from_operators(cx.q(), euler_characteristic(cx), h.a1, h.a2, edge_operator(cx), chamber_operator(cx), opts);
}

IdentityReport check_main_identity(const ZetaBundle& b) {
    IdentityReport r;
    const IntPoly cube = IntPoly::one_minus(1, 3).pow(static_cast<unsigned>(std::labs(b.chi)));
    r.lhs = b.pe * b.pe2;
    r.rhs = b.dvertex * b.pb;
    if (b.chi >= 0)
        r.lhs *= cube;
    else
        r.rhs *= cube;
    r.residual = r.lhs - r.rhs;
    r.pass = r.residual.is_zero();
    return r;
}

ZetaFunctions zeta_functions(const ZetaBundle& b) {
    ZetaFunctions z;
    z.z = RationalFunction(IntPoly(1), b.pe * b.pe2);
    z.z1 = RationalFunction(IntPoly(1), b.pe);
    z.z2 = RationalFunction(IntPoly(1), b.pb.negate_variable());
    z.zminus = RationalFunction(b.pb, b.pe2);
    return z;
}

namespace {

IntMatrix multiply(const IntMatrix& x, const SparseOperator& s) {
    IntMatrix out(x.n);
    for (std::size_t k = 0; k < x.n; ++k)
        for (const auto& e : s.row(k))
            for (std::size_t i = 0; i < x.n; ++i)
                if (x.at(i, k) != 0) out.at(i, static_cast<std::size_t>(e.col)) += x.at(i, k) * e.value;
    return out;
}

void add_scaled(IntMatrix& acc, const IntMatrix& x, const BigInt& s) {
    for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += s * x.a[i];
}

}  // namespace

std::vector<BigInt> HeckeSeriesTable::traces() const {
    std::vector<BigInt> t;
    for (const auto& m : aggregate) {
        BigInt s = 0;
        for (std::size_t i = 0; i < m.n; ++i) s += m.at(i, i);
        t.push_back(s);
    }
    return t;
}

HeckeSeriesTable hecke_series(int q, const SparseOperator& a1, const SparseOperator& a2, std::size_t order) {
    // S Y = (1-u^3) I gives Tbar_k = Tbar_{k-1} A1 - q Tbar_{k-2} A2 + q^3 Tbar_{k-3} + [k=0] I - [k=3] I.
    HeckeSeriesTable t;
    t.q = q;
    const std::size_t n = a1.rows();
    const BigInt q3 = BigInt(q) * q * q;
    for (std::size_t k = 0; k <= order; ++k) {
        IntMatrix m(n);
        if (k >= 1) m = multiply(t.aggregate[k - 1], a1);
        if (k >= 2) add_scaled(m, multiply(t.aggregate[k - 2], a2), BigInt(-q));
        if (k >= 3) add_scaled(m, t.aggregate[k - 3], q3);
        if (k == 0 || k == 3)
            for (std::size_t i = 0; i < n; ++i) m.at(i, i) += (k == 0 ? 1 : -1);
        t.aggregate.push_back(std::move(m));
    }
    return t;
}

HeckeSeriesTable hecke_series(const TypedComplex& cx, std::size_t order) {
    require_valid_connected(cx);
    const auto h = vertex_hecke(cx);
    return hecke_series(cx.q(), h.a1, h.a2, order);
}

SeriesIdentityReport check_section9_series(const ZetaBundle& b, const HeckeSeriesTable& hecke, std::size_t order) {
    if (hecke.aggregate.size() <= order) fail(ErrorKind::InvalidArgument, "Hecke table shorter than requested order");
    SeriesIdentityReport r;
    const IntPoly cube = IntPoly::one_minus(1, 3);
    r.vertex_side = log_derivative(cube, order) * BigRat(b.chi) - log_derivative(b.dvertex, order);
    r.operator_side = log_derivative(b.pb, order) - log_derivative(b.pe, order) - log_derivative(b.pe2, order);
    r.identity_pass = r.vertex_side == r.operator_side;

    const auto tr = hecke.traces();
    Series s(order);
    for (std::size_t k = 1; k <= order; ++k) s[k] = tr[k];
    const int q = b.q;
    const Series ratio = Series::quotient(IntPoly::one_minus(BigInt(q) * q, 3), cube, order);
    Series bn0 = r.vertex_side + s * ratio * BigRat(q - 1);
    bn0 *= BigRat(1, q);
    r.trace_bn0 = bn0;
    r.extraction_pass = bn0.is_nonnegative_integral() && bn0[0] == 0;
    return r;
}

SeriesIdentityReport check_section9_series(const TypedComplex& cx, std::size_t order, const DetOptions& opts) {
    const ZetaBundle b = zeta_bundle(cx, opts);
    return check_section9_series(b, hecke_series(cx, order), order);
}

namespace {

// Exact factors 1 - c u^3 of p, found by rounding 1/z^3 over the given roots
// and confirmed by exact division.
std::vector<BigInt> binomial_cubic_factors(const IntPoly& p, const std::vector<Root>& roots) {
    std::vector<BigInt> found;
    IntPoly rest = p;
    for (const Root& r : roots) {
        const std::complex<long double> w = 1.0L / (r.value * r.value * r.value);
        if (std::fabs(w.imag()) > 0.25L || std::fabs(w.real()) > 1e17L) continue;
        const BigInt c(static_cast<long>(std::llround(w.real())));
        if (c == 0 || std::find(found.begin(), found.end(), c) != found.end()) continue;
        if (exact_quotient(rest, IntPoly::one_minus(c, 3))) found.push_back(c);
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<ClassifiedRoot> classify(const IntPoly& p, double tol, const std::vector<ModulusBin>& targets, std::vector<ModulusBin>& hist) {
    const auto roots = polynomial_roots(p, tol);
    hist = targets;
    const std::size_t main_bins = hist.size();
    std::vector<BigInt> cs = binomial_cubic_factors(p, roots);
    for (const BigInt& c : cs)
        hist.push_back({IntPoly::one_minus(c, 3).pretty(), std::pow(std::fabs(c.get_d()), -1.0 / 3.0), 0});
    hist.push_back({"other", 0, 0});
    std::vector<ClassifiedRoot> out;
    for (const Root& r : roots) {
        ClassifiedRoot c;
        c.value = {static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())};
        c.modulus = static_cast<double>(std::abs(r.value));
        c.residual = static_cast<double>(r.relative_residual);
        c.cls = "other";
        std::size_t slot = hist.size() - 1;
        for (std::size_t i = 0; i < main_bins; ++i)
            if (std::fabs(c.modulus - hist[i].modulus) <= tol) {
                c.cls = hist[i].label;
                slot = i;
                break;
            }
        for (std::size_t i = 0; slot == hist.size() - 1 && i < cs.size(); ++i) {
            const std::complex<long double> w = r.value * r.value * r.value * static_cast<long double>(cs[i].get_d());
            if (std::abs(w - 1.0L) <= tol) {
                slot = main_bins + i;
                c.cls = hist[slot].label;
            }
        }
        ++hist[slot].count;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TrivialZeroSplit split_trivial_zeros(const IntPoly& dvertex, int q, double tol) {
    TrivialZeroSplit s;
    struct Target {
        std::complex<long double> z;
        std::string name;
        bool used = false;
    };
    std::vector<Target> targets;
    const char* zeta_names[3] = {"1", "w", "w^2"};
    const char* scale_names[3] = {"", "/q", "/q^2"};
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
            const long double angle = 2 * std::numbers::pi_v<long double> * j / 3;
            targets.push_back({std::polar(std::pow(static_cast<long double>(q), -k), angle), std::string(zeta_names[j]) + scale_names[k]});
        }
    for (const Root& r : polynomial_roots(dvertex, tol)) {
        ClassifiedRoot c;
        c.value = {static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())};
        c.modulus = static_cast<double>(std::abs(r.value));
        c.residual = static_cast<double>(r.relative_residual);
        c.cls = "nontrivial";
        for (auto& t : targets) {
            if (std::abs(r.value - t.z) > tol) continue;
            if (!t.used) {
                t.used = true;
                c.cls = "trivial";
                ++s.trivial_found;
            } else {
                c.cls = "trivial-surplus";
                ++s.surplus;
            }
            break;
        }
        s.roots.push_back(c);
    }
    for (const auto& t : targets)
        if (!t.used) s.missing.push_back(t.name);
    return s;
}

RamanujanReport ramanujan_check(const ZetaBundle& b, double tol) {
    if (!(tol > 0 && tol <= 1e-3)) fail(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1e-3]");
    RamanujanReport r;
    const double q = b.q;
    r.dvertex = split_trivial_zeros(b.dvertex, b.q, tol);
    r.ramanujan = true;
    for (const auto& c : r.dvertex.roots)
        if (c.cls != "trivial" && std::fabs(c.modulus - 1.0 / q) > tol) r.ramanujan = false;
    r.pb_roots = classify(b.pb, tol, {{"1", 1.0, 0}, {"q^-1/2", std::pow(q, -0.5), 0}, {"q^-1/4", std::pow(q, -0.25), 0}}, r.pb_histogram);
    r.pe_roots = classify(b.pe, tol, {{"q^-1", 1.0 / q, 0}, {"q^-1/2", std::pow(q, -0.5), 0}}, r.pe_histogram);
    return r;
}

}  // namespace a2zeta
