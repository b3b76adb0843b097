#include "a2zeta/operators.hpp"

#include <algorithm>
#include <sstream>

#include "a2zeta/errors.hpp"

namespace a2zeta {

const char* to_string(IndexSpace space) {
    switch (space) {
    case IndexSpace::Vertices: return "vertices";
    case IndexSpace::Edges1: return "edges1";
    case IndexSpace::DirectedChambers: return "directed-chambers";
    case IndexSpace::DirectedEdges: return "directed-edges";
    }
    return "?";
}

SparseOperator::SparseOperator(IndexSpace row_space, IndexSpace col_space, std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : row_space_(row_space), col_space_(col_space), rows_(rows), cols_(cols) {
    for (const auto& t : entries)
        if (t.row < 0 || t.col < 0 || static_cast<std::size_t>(t.row) >= rows || static_cast<std::size_t>(t.col) >= cols)
            fail(ErrorKind::IndexOutOfRange, "operator entry (" + std::to_string(t.row) + "," + std::to_string(t.col) + ") out of range");
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) { return std::pair{a.row, a.col} < std::pair{b.row, b.col}; });
    offsets_.assign(rows + 1, 0);
    for (std::size_t k = 0; k < entries.size();) {
        const Triplet& t = entries[k];
        long sum = 0;
        while (k < entries.size() && entries[k].row == t.row && entries[k].col == t.col) sum += entries[k++].value;
        if (sum != 0) {
            entries_.push_back({t.col, sum});
            ++offsets_[static_cast<std::size_t>(t.row) + 1];
        }
    }
    for (std::size_t i = 0; i < rows; ++i) offsets_[i + 1] += offsets_[i];
}

long SparseOperator::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(ErrorKind::IndexOutOfRange, "operator index out of range");
    const auto r = row(i);
    const auto it = std::lower_bound(r.begin(), r.end(), static_cast<int>(j), [](const Entry& e, int c) { return e.col < c; });
    return (it != r.end() && it->col == static_cast<int>(j)) ? it->value : 0;
}

long SparseOperator::row_sum(std::size_t i) const {
    long s = 0;
    for (const auto& e : row(i)) s += e.value;
    return s;
}

std::vector<SparseOperator::Triplet> SparseOperator::triplets() const {
    std::vector<Triplet> out;
    out.reserve(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : row(i)) out.push_back({static_cast<int>(i), e.col, e.value});
    return out;
}

SparseOperator SparseOperator::transpose() const {
    auto t = triplets();
    for (auto& x : t) std::swap(x.row, x.col);
    return SparseOperator(col_space_, row_space_, cols_, rows_, std::move(t));
}

SparseOperator SparseOperator::with_entry(std::size_t i, std::size_t j, long value) const {
    auto t = triplets();
    t.push_back({static_cast<int>(i), static_cast<int>(j), value - at(i, j)});
    return SparseOperator(row_space_, col_space_, rows_, cols_, std::move(t));
}

IntMatrix SparseOperator::to_dense() const {
    if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "dense conversion needs a square operator");
    IntMatrix m(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : row(i)) m.at(i, static_cast<std::size_t>(e.col)) = e.value;
    return m;
}

std::vector<BigInt> SparseOperator::trace_powers(std::size_t max_power) const {
    if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "trace of a non-square operator");
    const std::size_t n = rows_;
    std::vector<BigInt> traces(max_power + 1);
    traces[0] = static_cast<long>(n);
    std::vector<BigInt> cur(n * n), next(n * n);
    for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
    for (std::size_t p = 1; p <= max_power; ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            BigInt* out = &next[i * n];
            for (std::size_t j = 0; j < n; ++j) out[j] = 0;
            for (const auto& e : row(i)) {
                const BigInt* in = &cur[static_cast<std::size_t>(e.col) * n];
                for (std::size_t j = 0; j < n; ++j)
                    if (in[j] != 0) out[j] += e.value * in[j];
            }
        }
        std::swap(cur, next);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += cur[i * n + i];
        traces[p] = tr;
    }
    return traces;
}

PolyMatrix SparseOperator::identity_plus(long sign, unsigned power) const {
    if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "identity_plus needs a square operator");
    PolyMatrix m(rows_);
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, i) = IntPoly(1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : row(i)) m.at(i, static_cast<std::size_t>(e.col)) += IntPoly::monomial(BigInt(sign * e.value), power);
    return m;
}

std::string serialize_sparse(const SparseOperator& op) {
    std::ostringstream os;
    os << "sparse " << op.rows() << ' ' << op.cols() << ' ' << op.nnz() << "\n";
    for (const auto& t : op.triplets()) os << t.row << ' ' << t.col << ' ' << t.value << "\n";
    return os.str();
}

SparseOperator parse_sparse(std::string_view text, IndexSpace row_space, IndexSpace col_space) {
    std::istringstream is{std::string(text)};
    std::string tag;
    long rows = -1, cols = -1, nnz = -1;
    if (!(is >> tag >> rows >> cols >> nnz) || tag != "sparse" || rows < 0 || cols < 0 || nnz < 0)
        fail(ErrorKind::Parse, "line 1: expected 'sparse <rows> <cols> <nnz>'");
    std::vector<SparseOperator::Triplet> t;
    for (long k = 0; k < nnz; ++k) {
        SparseOperator::Triplet x{};
        if (!(is >> x.row >> x.col >> x.value)) fail(ErrorKind::Parse, "line " + std::to_string(k + 2) + ": expected 'row col value'");
        t.push_back(x);
    }
    std::string extra;
    if (is >> extra) fail(ErrorKind::Parse, "trailing content after " + std::to_string(nnz) + " entries");
    return SparseOperator(row_space, col_space, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(t));
}

VertexHecke vertex_hecke(const TypedComplex& cx) {
    std::vector<SparseOperator::Triplet> t;
    for (const auto& e : cx.edges()) t.push_back({e.src, e.dst, 1});
    const std::size_t v = cx.vertex_count();
    SparseOperator a1(IndexSpace::Vertices, IndexSpace::Vertices, v, v, std::move(t));
    SparseOperator a2 = a1.transpose();
    return {std::move(a1), std::move(a2)};
}

namespace {

// Type-1 edges leaving each vertex, ascending id.
std::vector<std::vector<int>> out_edges(const TypedComplex& cx) {
    std::vector<std::vector<int>> out(cx.vertex_count());
    for (std::size_t i = 0; i < cx.edge_count(); ++i) out[static_cast<std::size_t>(cx.edges()[i].src)].push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> in_edges(const TypedComplex& cx) {
    std::vector<std::vector<int>> in(cx.vertex_count());
    for (std::size_t i = 0; i < cx.edge_count(); ++i) in[static_cast<std::size_t>(cx.edges()[i].dst)].push_back(static_cast<int>(i));
    return in;
}

bool share_chamber(const TypedComplex& cx, int e, int f) {
    const auto& ce = cx.chambers_of_edge()[static_cast<std::size_t>(e)];
    const auto& cf = cx.chambers_of_edge()[static_cast<std::size_t>(f)];
    for (int c : ce)
        if (std::binary_search(cf.begin(), cf.end(), c)) return true;
    return false;
}

}  // namespace

SparseOperator edge_operator(const TypedComplex& cx) {
    const auto out = out_edges(cx);
    std::vector<SparseOperator::Triplet> t;
    for (std::size_t e = 0; e < cx.edge_count(); ++e)
        for (int f : out[static_cast<std::size_t>(cx.edges()[e].dst)])
            if (!share_chamber(cx, static_cast<int>(e), f)) t.push_back({static_cast<int>(e), f, 1});
    return SparseOperator(IndexSpace::Edges1, IndexSpace::Edges1, cx.edge_count(), cx.edge_count(), std::move(t));
}

SparseOperator type2_edge_operator(const TypedComplex& cx) {
    // The reverse of e runs dst(e) -> src(e); it continues into reverses of
    // type-1 edges ending at src(e).
    const auto in = in_edges(cx);
    std::vector<SparseOperator::Triplet> t;
    for (std::size_t e = 0; e < cx.edge_count(); ++e)
        for (int f : in[static_cast<std::size_t>(cx.edges()[e].src)])
            if (!share_chamber(cx, static_cast<int>(e), f)) t.push_back({static_cast<int>(e), f, 1});
    return SparseOperator(IndexSpace::Edges1, IndexSpace::Edges1, cx.edge_count(), cx.edge_count(), std::move(t));
}

SparseOperator chamber_operator(const TypedComplex& cx) {
    std::vector<SparseOperator::Triplet> t;
    const auto& by_edge = cx.chambers_of_edge();
    for (std::size_t c = 0; c < cx.chamber_count(); ++c) {
        const auto& ch = cx.chambers()[c];
        for (int s = 0; s < 3; ++s) {
            const int e2 = ch[static_cast<std::size_t>((s + 1) % 3)];
            for (int c2 : by_edge[static_cast<std::size_t>(e2)]) {
                if (c2 == static_cast<int>(c)) continue;
                const auto& other = cx.chambers()[static_cast<std::size_t>(c2)];
                for (int j = 0; j < 3; ++j)
                    if (other[static_cast<std::size_t>(j)] == e2) t.push_back({static_cast<int>(3 * c) + s, 3 * c2 + (j + 1) % 3, 1});
            }
        }
    }
    const std::size_t n = 3 * cx.chamber_count();
    return SparseOperator(IndexSpace::DirectedChambers, IndexSpace::DirectedChambers, n, n, std::move(t));
}

}  // namespace a2zeta
