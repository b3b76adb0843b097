#pragma once

#include <complex>
#include <vector>

#include "a2zeta/poly.hpp"

namespace a2zeta {

struct Root {
    std::complex<long double> value;
    /// |p(z)| / sum |a_i| |z|^i after polishing.
    long double relative_residual = 0;
};

/// All complex roots of p with multiplicity (deg p of them), in a
/// deterministic order: squarefree parts in Yun order, then by argument
/// and modulus. Companion-matrix eigenvalues of each squarefree factor are
/// polished by Newton's method in long double; throws RootFindingFailure if
/// any certified relative residual exceeds tol.
std::vector<Root> polynomial_roots(const IntPoly& p, double tol);

}  // namespace a2zeta
