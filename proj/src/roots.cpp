#include "a2zeta/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "a2zeta/errors.hpp"

namespace a2zeta {

namespace {

using cld = std::complex<long double>;

long double to_ld(const BigInt& x) {
    // mpz_get_d truncates; exponent split keeps huge coefficients finite.
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

struct Evaluated {
    cld value;
    cld derivative;
    long double scale;
};

Evaluated horner(const std::vector<long double>& a, cld z) {
    cld v = 0, d = 0;
    long double s = 0;
    const long double r = std::abs(z);
    for (std::size_t i = a.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + a[i];
        s = s * r + std::fabs(a[i]);
    }
    return {v, d, s};
}

// Roots of a squarefree polynomial in w = u^k given by coefficients a (in w).
std::vector<cld> roots_in_power(const std::vector<long double>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<cld> roots;
    if (n <= 0) return roots;
    // scale w = s x so the roots of the scaled polynomial cluster near the unit circle
    const long double s = std::pow(std::fabs(a[0] / a[static_cast<std::size_t>(n)]), 1.0L / n);
    std::vector<long double> b(a.size());
    long double sp = 1;
    for (int i = 0; i <= n; ++i) {
        b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * sp;
        sp *= s;
    }
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Mat c = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -b[static_cast<std::size_t>(i)] / b[static_cast<std::size_t>(n)];
    Eigen::EigenSolver<Mat> es(c, false);
    if (es.info() != Eigen::Success) fail(ErrorKind::RootFindingFailure, "companion eigenvalue iteration did not converge");
    for (int i = 0; i < n; ++i) roots.push_back(cld(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag()) * s);
    return roots;
}

void polish(const std::vector<long double>& a, cld& z) {
    for (int it = 0; it < 80; ++it) {
        const Evaluated e = horner(a, z);
        if (e.derivative == cld(0)) break;
        const cld step = e.value / e.derivative;
        z -= step;
        if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(z))) break;
    }
}

std::vector<cld> squarefree_roots(const IntPoly& f) {
    const int n = f.degree();
    if (n <= 0) return {};
    std::vector<long double> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = to_ld(f.coeff(static_cast<std::size_t>(i)));

    // f(u) = g(u^k) when only every k-th power occurs and f(0) != 0
    unsigned k = 1;
    if (f.coeff(0) != 0)
        for (unsigned d = static_cast<unsigned>(n); d > 1; --d)
            if (n % static_cast<int>(d) == 0 && f.only_powers_of(d)) {
                k = d;
                break;
            }
    std::vector<long double> g;
    for (int i = 0; i <= n; i += static_cast<int>(k)) g.push_back(a[static_cast<std::size_t>(i)]);
    std::vector<cld> roots;
    for (cld w : roots_in_power(g)) {
        polish(g, w);
        const cld base = std::polar(std::pow(std::abs(w), 1.0L / k), std::arg(w) / k);
        for (unsigned j = 0; j < k; ++j) {
            cld z = base * std::polar(1.0L, 2 * std::numbers::pi_v<long double> * j / k);
            polish(a, z);
            roots.push_back(z);
        }
    }
    return roots;
}

}  // namespace

std::vector<Root> polynomial_roots(const IntPoly& p, double tol) {
    if (p.is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
    std::vector<long double> full(p.coeffs().size());
    for (std::size_t i = 0; i < full.size(); ++i) full[i] = to_ld(p.coeff(i));

    std::vector<Root> out;
    const auto parts = squarefree_decomposition(p);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto zs = squarefree_roots(parts[k]);
        std::vector<long double> a(parts[k].coeffs().size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = to_ld(parts[k].coeff(i));
        std::sort(zs.begin(), zs.end(), [](const cld& x, const cld& y) {
            const long double mx = std::abs(x), my = std::abs(y);
            if (std::fabs(mx - my) > 1e-12L * std::max(mx, my)) return mx < my;
            return std::arg(x) < std::arg(y);
        });
        for (const cld& z : zs) {
            const Evaluated e = horner(a, z);
            const long double res = e.scale > 0 ? std::abs(e.value) / e.scale : 0;
            if (!(res <= tol))
                fail(ErrorKind::RootFindingFailure, "root residual " + std::to_string(static_cast<double>(res)) + " exceeds tolerance");
            for (std::size_t m = 0; m <= k; ++m) out.push_back({z, res});
        }
    }
    return out;
}

}  // namespace a2zeta
