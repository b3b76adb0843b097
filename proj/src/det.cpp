#include "a2zeta/det.hpp"

#include <mutex>
#include <stdexcept>
#include <thread>

namespace a2zeta {

BigInt det_bareiss(IntMatrix m) {
    const std::size_t n = m.n;
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& x = m.at(i, j);
                x *= m.at(k, k);
                mpz_submul(x.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, j).get_mpz_t());
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

IntPoly det_poly_bareiss(const PolyMatrix& in) {
    const std::size_t n = in.size();
    if (n == 0) return IntPoly(1);
    PolyMatrix m = in;
    IntPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly x = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = exact_quotient(x, prev);
                if (!q) throw std::logic_error("Bareiss division was not exact");
                m.at(i, j) = std::move(*q);
            }
        }
        prev = m.at(k, k);
    }
    IntPoly d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

std::vector<long> interpolation_points(std::size_t count) {
    std::vector<long> pts;
    pts.reserve(count);
    for (long k = 0; pts.size() < count; ++k) {
        if (k == 0) {
            pts.push_back(0);
            continue;
        }
        pts.push_back(k);
        if (pts.size() < count) pts.push_back(-k);
    }
    return pts;
}

namespace modular {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const BigInt& v, u64 p) {
    BigInt r;
    BigInt pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

BigInt to_big(u64 v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
    return r;
}

u64 point_mod(long x, u64 p) {
    return x >= 0 ? static_cast<u64>(x) % p : p - (static_cast<u64>(-x) % p);
}

}  // namespace

const std::vector<u64>& primes(std::size_t count) {
    static std::vector<u64> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (miller_rabin(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return cache;
}

u64 det_mod(std::vector<u64> m, std::size_t n, u64 p) {
    u64 det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            det = det == 0 ? 0 : p - det;
        }
        const u64 pivot = m[k * n + k];
        det = mulmod(det, pivot, p);
        const u64 inv = inverse(pivot, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            const u64 f = mulmod(m[i * n + k], inv, p);
            if (f == 0) continue;
            for (std::size_t j = k + 1; j < n; ++j) {
                const u64 t = mulmod(f, m[k * n + j], p);
                u64& x = m[i * n + j];
                x = x >= t ? x - t : x + p - t;
            }
        }
    }
    return det;
}

namespace {

// Coefficients (mod p) of det(m) as a polynomial of degree <= deg.
std::vector<u64> det_poly_mod(const PolyMatrix& m, std::size_t deg, const std::vector<long>& pts, u64 p) {
    const std::size_t n = m.size();
    std::vector<std::vector<u64>> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = m.at(i, j).coeffs();
            auto& e = entries[i * n + j];
            e.reserve(c.size());
            for (const auto& v : c) e.push_back(reduce(v, p));
        }
    const std::size_t count = deg + 1;
    std::vector<u64> xs(count), values(count);
    std::vector<u64> buf(n * n);
    for (std::size_t t = 0; t < count; ++t) {
        const u64 x = point_mod(pts[t], p);
        xs[t] = x;
        for (std::size_t k = 0; k < n * n; ++k) {
            const auto& e = entries[k];
            u64 acc = 0;
            for (auto it = e.rbegin(); it != e.rend(); ++it) {
                acc = mulmod(acc, x, p) + *it;
                if (acc >= p) acc -= p;
            }
            buf[k] = acc;
        }
        values[t] = det_mod(buf, n, p);
    }
    // divided differences
    std::vector<u64> c = values;
    for (std::size_t j = 1; j < count; ++j)
        for (std::size_t i = count - 1; i >= j; --i) {
            const u64 num = c[i] >= c[i - 1] ? c[i] - c[i - 1] : c[i] + p - c[i - 1];
            const u64 den = xs[i] >= xs[i - j] ? xs[i] - xs[i - j] : xs[i] + p - xs[i - j];
            c[i] = mulmod(num, inverse(den, p), p);
        }
    // Newton form to monomial form
    std::vector<u64> poly(count, 0);
    poly[0] = c[count - 1];
    std::size_t len = 1;
    for (std::size_t i = count - 1; i-- > 0;) {
        // poly = poly * (u - x_i) + c_i
        const u64 negx = xs[i] == 0 ? 0 : p - xs[i];
        poly[len] = 0;
        for (std::size_t k = len; k > 0; --k) {
            poly[k] = (poly[k - 1] + mulmod(poly[k], negx, p)) % p;
        }
        poly[0] = (mulmod(poly[0], negx, p) + c[i]) % p;
        ++len;
    }
    return poly;
}

}  // namespace
}  // namespace modular

IntPoly det_poly_interpolate(const PolyMatrix& m, unsigned jobs) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly(1);
    const std::size_t deg = static_cast<std::size_t>(m.max_degree()) * n;
    const auto pts = interpolation_points(deg + 1);

    // ||det||_1 <= prod_i sum_j ||a_ij||_1
    BigInt bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& c : m.at(i, j).coeffs()) row += abs(c);
        bound *= row;
    }
    if (bound == 0) return {};
    const BigInt needed = 2 * bound + 1;

    std::size_t nprimes = 0;
    {
        BigInt prod = 1;
        std::size_t k = 0;
        while (prod <= needed) {
            prod *= modular::to_big(modular::primes(k + 1)[k]);
            ++k;
        }
        nprimes = k;
    }
    const auto& ps = modular::primes(nprimes);

    std::vector<std::vector<std::uint64_t>> residues(nprimes);
    if (jobs <= 1 || nprimes == 1) {
        for (std::size_t k = 0; k < nprimes; ++k) residues[k] = modular::det_poly_mod(m, deg, pts, ps[k]);
    } else {
        std::vector<std::thread> workers;
        const unsigned w = std::min<unsigned>(jobs, static_cast<unsigned>(nprimes));
        for (unsigned t = 0; t < w; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t k = t; k < nprimes; k += w) residues[k] = modular::det_poly_mod(m, deg, pts, ps[k]);
            });
        for (auto& th : workers) th.join();
    }

    // Garner / incremental CRT, then symmetric lift
    std::vector<BigInt> coeffs(deg + 1);
    BigInt modulus = 1;
    for (std::size_t k = 0; k < nprimes; ++k) {
        const std::uint64_t p = ps[k];
        const BigInt pb = modular::to_big(p);
        BigInt minv;
        const BigInt mred = modulus % pb;
        mpz_invert(minv.get_mpz_t(), mred.get_mpz_t(), pb.get_mpz_t());
        for (std::size_t i = 0; i <= deg; ++i) {
            BigInt diff = modular::to_big(residues[k][i]) - coeffs[i];
            BigInt t = diff * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pb.get_mpz_t());
            coeffs[i] += modulus * t;
        }
        modulus *= pb;
    }
    const BigInt half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half) c -= modulus;
    return IntPoly(std::move(coeffs));
}

IntPoly det_poly(const PolyMatrix& m, const DetOptions& opts) {
    IntPoly d = det_poly_interpolate(m, opts.jobs);
    if (m.size() <= opts.cross_check_max_dim) {
        if (det_poly_bareiss(m) != d) throw std::logic_error("det_poly: interpolation and elimination disagree");
    }
    return d;
}

}  // namespace a2zeta
