#pragma once

#include <complex>
#include <string>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/det.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/poly.hpp"

namespace a2zeta {

/// The four determinants of the main identity together with chi.
struct ZetaBundle {
    int q = 0;
    long chi = 0;
    /// det(I - A1 u + q A2 u^2 - q^3 u^3 I)
    IntPoly dvertex;
    /// det(I + L_B u)
    IntPoly pb;
    /// det(I - L_E u)
    IntPoly pe;
    /// det(I - L_E u^2)
    IntPoly pe2;
};

/// I - A1 u + q A2 u^2 - q^3 u^3 I
PolyMatrix vertex_matrix(int q, const SparseOperator& a1, const SparseOperator& a2);

/// Requires a valid connected complex (ValidationFailure otherwise).
ZetaBundle zeta_bundle(const TypedComplex& complex, const DetOptions& opts = {});
ZetaBundle zeta_bundle_from_operators(int q, long chi, const SparseOperator& a1, const SparseOperator& a2,
                                      const SparseOperator& le, const SparseOperator& lb, const DetOptions& opts = {});

struct IdentityReport {
    bool pass = false;
    /// (1-u^3)^chi PE PE2
    IntPoly lhs;
    /// Dvertex PB
    IntPoly rhs;
    IntPoly residual;
};

/// (1-u^3)^chi PE PE2 == Dvertex PB exactly. chi < 0 moves the power to the right.
IdentityReport check_main_identity(const ZetaBundle& bundle);

struct ZetaFunctions {
    /// 1/(PE PE2)
    RationalFunction z;
    /// 1/PE
    RationalFunction z1;
    /// 1/det(I - L_B u)
    RationalFunction z2;
    /// PB/PE2
    RationalFunction zminus;
};

ZetaFunctions zeta_functions(const ZetaBundle& bundle);

/// Per-degree aggregates Tbar_k = sum_{n+2m=k} B_{n,m}, the coefficients of
/// (1-u^3)(I - A1 u + q A2 u^2 - q^3 u^3 I)^{-1}.
struct HeckeSeriesTable {
    int q = 0;
    std::vector<IntMatrix> aggregate;

    /// Tr Tbar_k for k = 0..N.
    std::vector<BigInt> traces() const;
};

HeckeSeriesTable hecke_series(int q, const SparseOperator& a1, const SparseOperator& a2, std::size_t order);
HeckeSeriesTable hecke_series(const TypedComplex& complex, std::size_t order);

struct SeriesIdentityReport {
    /// u d/du log[(1-u^3)^chi / Dvertex]
    Series vertex_side;
    /// u d/du log[Z1(u) Z1(u^2) / Z2(-u)]
    Series operator_side;
    /// sum_n Tr B_{n,0} u^n solved from the aggregate traces.
    Series trace_bn0;
    bool identity_pass = false;
    bool extraction_pass = false;

    bool pass() const { return identity_pass && extraction_pass; }
};

SeriesIdentityReport check_section9_series(const ZetaBundle& bundle, const HeckeSeriesTable& hecke, std::size_t order);
SeriesIdentityReport check_section9_series(const TypedComplex& complex, std::size_t order, const DetOptions& opts = {});

struct ClassifiedRoot {
    std::complex<double> value;
    double modulus = 0;
    std::string cls;
    double residual = 0;
};

struct ModulusBin {
    std::string label;
    double modulus = 0;
    std::size_t count = 0;
};

/// Roots of a vertex determinant split into the nine trivial zeros
/// {zeta, zeta/q, zeta/q^2 : zeta^3 = 1} and the rest. Each trivial zero is
/// removed at most once; further matches stay in the list as
/// "trivial-surplus".
struct TrivialZeroSplit {
    std::vector<ClassifiedRoot> roots;
    std::size_t trivial_found = 0;
    std::size_t surplus = 0;
    std::vector<std::string> missing;
};

TrivialZeroSplit split_trivial_zeros(const IntPoly& dvertex, int q, double tol);

struct RamanujanReport {
    /// Every nontrivial root of Dvertex has |u| within tol of 1/q.
    bool ramanujan = false;
    TrivialZeroSplit dvertex;
    std::vector<ClassifiedRoot> pb_roots;
    std::vector<ClassifiedRoot> pe_roots;
    std::vector<ModulusBin> pb_histogram;
    std::vector<ModulusBin> pe_histogram;
};

/// tol in (0, 1e-3]; throws InvalidArgument otherwise.
RamanujanReport ramanujan_check(const ZetaBundle& bundle, double tol = 1e-6);

}  // namespace a2zeta
