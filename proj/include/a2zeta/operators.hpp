#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/det.hpp"

namespace a2zeta {

enum class IndexSpace { Vertices, Edges1, DirectedChambers, DirectedEdges };

const char* to_string(IndexSpace space);

/// Exact sparse integer matrix in compressed-row form with tagged index spaces.
class SparseOperator {
public:
    struct Entry {
        int col;
        long value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    struct Triplet {
        int row;
        int col;
        long value;
    };

    SparseOperator() = default;
    /// Duplicate (row, col) triplets are summed; zero results are dropped.
    SparseOperator(IndexSpace row_space, IndexSpace col_space, std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

    IndexSpace row_space() const noexcept { return row_space_; }
    IndexSpace col_space() const noexcept { return col_space_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    /// Entries of row i in increasing column order.
    std::span<const Entry> row(std::size_t i) const {
        return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    long at(std::size_t i, std::size_t j) const;
    long row_sum(std::size_t i) const;

    SparseOperator transpose() const;
    /// Copy with entry (i, j) set to value (used for perturbation tests).
    SparseOperator with_entry(std::size_t i, std::size_t j, long value) const;
    IntMatrix to_dense() const;
    std::vector<Triplet> triplets() const;

    /// Tr X^n for n = 1..N by repeated sparse-dense products (no determinants).
    std::vector<BigInt> trace_powers(std::size_t max_power) const;

    /// I + sign * X u^power (square operators only).
    PolyMatrix identity_plus(long sign, unsigned power) const;

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.offsets_ == b.offsets_ && a.entries_ == b.entries_;
    }

private:
    IndexSpace row_space_ = IndexSpace::Vertices;
    IndexSpace col_space_ = IndexSpace::Vertices;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Entry> entries_;
};

/// `sparse <rows> <cols> <nnz>` followed by `row col value` lines.
std::string serialize_sparse(const SparseOperator& op);
SparseOperator parse_sparse(std::string_view text, IndexSpace row_space = IndexSpace::Vertices, IndexSpace col_space = IndexSpace::Vertices);

struct VertexHecke {
    SparseOperator a1;
    SparseOperator a2;
};

/// A1[u][w] = number of type-1 edges u -> w; A2 = A1^T.
VertexHecke vertex_hecke(const TypedComplex& complex);

/// L_E on type-1 edges: e -> f when dst(e) = src(f) and no chamber contains both.
SparseOperator edge_operator(const TypedComplex& complex);

/// Adjacency of type-2 edges (reversed type-1 edges), indexed by the edge id of
/// the underlying type-1 edge. Built from its own definition; equals L_E^T.
SparseOperator type2_edge_operator(const TypedComplex& complex);

/// L_B on directed chambers (index 3c + s): (C, e1) -> (C', e') for every
/// chamber C' != C containing e2 = the edge after e1 in C, with e' the edge
/// after e2 in C'.
SparseOperator chamber_operator(const TypedComplex& complex);

}  // namespace a2zeta
