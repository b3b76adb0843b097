#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "a2zeta/det.hpp"
#include "a2zeta/ingest.hpp"
#include "a2zeta/poly.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(A2ZETA_DATA_DIR) + "/" + name; }

inline a2zeta::TypedComplex bundled_q2() { return a2zeta::parse_complex(a2zeta::read_file(data_path("bundled_q2.cx3"))); }
inline a2zeta::TypedComplex search_q3() { return a2zeta::parse_complex(a2zeta::read_file(data_path("search_q3.cx3"))); }

// Leibniz expansion over all permutations; independent of every library determinant.
template <class T, class Get>
T leibniz(std::size_t n, Get get) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        T term = get(0, perm[0]);
        for (std::size_t i = 1; i < n; ++i) term = term * get(i, perm[i]);
        if (inversions % 2) term = -term;
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline a2zeta::IntPoly random_poly(std::mt19937_64& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree), c(-bound, bound);
    std::vector<a2zeta::BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return a2zeta::IntPoly(std::move(v));
}

inline a2zeta::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> c(-bound, bound);
    a2zeta::IntMatrix m(n);
    for (auto& x : m.a) x = c(rng);
    return m;
}

// I - X u
inline a2zeta::PolyMatrix one_minus_xu(const a2zeta::IntMatrix& x) {
    a2zeta::PolyMatrix m(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            m.at(i, j) = a2zeta::IntPoly(std::vector<a2zeta::BigInt>{i == j ? 1 : 0, -x.at(i, j)});
    return m;
}

// Tr X^k for k = 0..n by dense repeated products.
inline std::vector<a2zeta::BigInt> dense_traces(const a2zeta::IntMatrix& x, std::size_t n) {
    std::vector<a2zeta::BigInt> out{a2zeta::BigInt(static_cast<long>(x.n))};
    a2zeta::IntMatrix p = x;
    for (std::size_t k = 1; k <= n; ++k) {
        a2zeta::BigInt t = 0;
        for (std::size_t i = 0; i < x.n; ++i) t += p.at(i, i);
        out.push_back(t);
        a2zeta::IntMatrix next(x.n);
        for (std::size_t i = 0; i < x.n; ++i)
            for (std::size_t l = 0; l < x.n; ++l)
                if (p.at(i, l) != 0)
                    for (std::size_t j = 0; j < x.n; ++j) next.at(i, j) += p.at(i, l) * x.at(l, j);
        p = std::move(next);
    }
    return out;
}

}  // namespace testing
