#include "a2zeta/graph.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "a2zeta/errors.hpp"
#include "a2zeta/roots.hpp"

namespace a2zeta {

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        ++d[static_cast<std::size_t>(u)];
        ++d[static_cast<std::size_t>(v)];
    }
    return d;
}

bool Graph::is_connected() const {
    if (vertex_count == 0) return true;
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    int comps = vertex_count;
    for (const auto& [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --comps;
        }
    }
    return comps == 1;
}

Graph parse_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    Graph g;
    bool header = false, have_vertices = false;
    auto err = [&](const std::string& m) { fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + m); };
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> t;
        std::string w;
        while (ls >> w) t.push_back(w);
        if (t.empty()) continue;
        auto num = [&](const std::string& s) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                err("expected an integer, got '" + s + "'");
            }
            if (used != s.size()) err("expected an integer, got '" + s + "'");
            return v;
        };
        if (!header) {
            if (t.size() != 2 || t[0] != "graph" || t[1] != "v1") err("expected header 'graph v1'");
            header = true;
        } else if (!have_vertices) {
            if (t.size() != 2 || t[0] != "vertices") err("expected 'vertices <n>'");
            const long n = num(t[1]);
            if (n < 1) err("vertex count must be positive");
            g.vertex_count = static_cast<int>(n);
            have_vertices = true;
        } else {
            if (t.size() != 3 || t[0] != "edge") err("expected 'edge <u> <v>'");
            const long u = num(t[1]), v = num(t[2]);
            if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) fail(ErrorKind::IndexOutOfRange, "line " + std::to_string(lineno) + ": vertex id out of range");
            g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (!have_vertices) err("missing 'vertices' line");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph v1\nvertices " << g.vertex_count << "\n";
    for (const auto& [u, v] : g.edges) os << "edge " << u << ' ' << v << "\n";
    return os.str();
}

SparseOperator graph_adjacency(const Graph& g) {
    std::vector<SparseOperator::Triplet> t;
    for (const auto& [u, v] : g.edges) {
        t.push_back({u, v, 1});
        t.push_back({v, u, 1});
    }
    const auto n = static_cast<std::size_t>(g.vertex_count);
    return SparseOperator(IndexSpace::Vertices, IndexSpace::Vertices, n, n, std::move(t));
}

SparseOperator edge_adjacency(const Graph& g) {
    const std::size_t m = g.edges.size();
    auto src = [&](std::size_t d) { return d % 2 == 0 ? g.edges[d / 2].first : g.edges[d / 2].second; };
    auto dst = [&](std::size_t d) { return d % 2 == 0 ? g.edges[d / 2].second : g.edges[d / 2].first; };
    std::vector<std::vector<std::size_t>> leaving(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t d = 0; d < 2 * m; ++d) leaving[static_cast<std::size_t>(src(d))].push_back(d);
    std::vector<SparseOperator::Triplet> t;
    for (std::size_t d = 0; d < 2 * m; ++d)
        for (std::size_t f : leaving[static_cast<std::size_t>(dst(d))])
            if (f != (d ^ 1)) t.push_back({static_cast<int>(d), static_cast<int>(f), 1});
    return SparseOperator(IndexSpace::DirectedEdges, IndexSpace::DirectedEdges, 2 * m, 2 * m, std::move(t));
}

IharaReport ihara_zeta(const Graph& g, const DetOptions& opts) {
    const auto deg = g.degrees();
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] < 2) fail(ErrorKind::DegreeTooLow, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
    if (!g.is_connected()) fail(ErrorKind::InvalidArgument, "graph is not connected");
    IharaReport r;
    r.chi = static_cast<long>(g.vertex_count) - static_cast<long>(g.edges.size());
    r.hashimoto_det = det_poly(edge_adjacency(g).identity_plus(-1, 1), opts);
    const SparseOperator a = graph_adjacency(g);
    PolyMatrix b = a.identity_plus(-1, 1);
    for (std::size_t v = 0; v < deg.size(); ++v) b.at(v, v) += IntPoly::monomial(deg[v] - 1, 2);
    r.bass_det = det_poly(b, opts);
    const IntPoly cyc = IntPoly(std::vector<BigInt>{1, 0, -1}).pow(static_cast<unsigned>(-r.chi));
    r.hashimoto = RationalFunction(IntPoly(1), r.hashimoto_det);
    r.bass = RationalFunction(IntPoly(1), cyc * r.bass_det);
    r.agree = r.hashimoto == r.bass;
    return r;
}

std::uint64_t count_Nn(const Graph& g, int length, std::uint64_t node_budget) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "length must be positive");
    // incidence lists: (edge id, other endpoint)
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        inc[static_cast<std::size_t>(u)].emplace_back(static_cast<int>(e), v);
        inc[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(e), u);
    }
    std::uint64_t count = 0, nodes = 0;
    // a step is (edge id, head); backtracking means reusing the edge just traversed from its far end
    int start_vertex = 0, first_edge = -1, first_side = 0;
    std::function<void(int, int, int, int)> walk = [&](int at, int via_edge, int via_side, int depth) {
        if (++nodes > node_budget) fail(ErrorKind::ResourceLimit, "walk enumeration exceeded " + std::to_string(node_budget) + " nodes");
        if (depth == length) {
            // close up: arrived at start without reversing the first step
            if (at == start_vertex && !(via_edge == first_edge && via_side != first_side)) ++count;
            return;
        }
        for (std::size_t k = 0; k < inc[static_cast<std::size_t>(at)].size(); ++k) {
            const auto [e, w] = inc[static_cast<std::size_t>(at)][k];
            // side distinguishes the two traversal directions (needed for loops)
            const int side = g.edges[static_cast<std::size_t>(e)].first == at && (g.edges[static_cast<std::size_t>(e)].second != at || k % 2 == 0) ? 0 : 1;
            if (e == via_edge && side != via_side) continue;
            if (depth == 0) {
                first_edge = e;
                first_side = side;
            }
            walk(w, e, side, depth + 1);
        }
    };
    for (int v = 0; v < g.vertex_count; ++v) {
        start_vertex = v;
        walk(v, -1, 0, 0);
    }
    return count;
}

GraphRamanujanReport ramanujan_graph_check(const Graph& g, double tol) {
    const auto deg = g.degrees();
    if (deg.empty() || std::any_of(deg.begin(), deg.end(), [&](int d) { return d != deg[0]; }))
        fail(ErrorKind::NotRegular, "graph is not regular");
    if (deg[0] < 3) fail(ErrorKind::NotRegular, "regular degree must be at least 3");
    GraphRamanujanReport r;
    r.q = deg[0] - 1;
    const int n = g.vertex_count;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges) {
        a(u, v) += 1;
        a(v, u) += 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) r.eigenvalues.push_back(es.eigenvalues()[i]);
    const double top = r.q + 1;
    r.nontrivial = r.eigenvalues;
    bool bipartite = false;
    auto drop = [&](double target) {
        for (auto it = r.nontrivial.begin(); it != r.nontrivial.end(); ++it)
            if (std::fabs(*it - target) <= tol) {
                r.nontrivial.erase(it);
                return true;
            }
        return false;
    };
    drop(top);
    bipartite = drop(-top);
    r.bound = 2 * std::sqrt(static_cast<double>(r.q));
    r.ramanujan = std::all_of(r.nontrivial.begin(), r.nontrivial.end(), [&](double l) { return std::fabs(l) <= r.bound + tol; });

    // Poles of 1/det(I - A_e u): E-V copies of +-1, (1, 1/q) for q+1 and (-1, -1/q) for -(q+1).
    const double q = r.q;
    const long excess = static_cast<long>(g.edges.size()) - n;
    std::vector<double> trivial;
    for (long i = 0; i < excess; ++i) {
        trivial.push_back(1);
        trivial.push_back(-1);
    }
    trivial.push_back(1);
    trivial.push_back(1 / q);
    if (bipartite) {
        trivial.push_back(-1);
        trivial.push_back(-1 / q);
    }
    const IntPoly det = det_poly(edge_adjacency(g).identity_plus(-1, 1));
    std::vector<bool> used(trivial.size(), false);
    r.poles_on_circle = true;
    const double circle = 1 / std::sqrt(q);
    for (const Root& z : polynomial_roots(det, std::max(tol, 1e-9))) {
        bool was_trivial = false;
        for (std::size_t i = 0; i < trivial.size(); ++i)
            if (!used[i] && std::abs(z.value - std::complex<long double>(trivial[i], 0)) <= 1e-6L) {
                used[i] = true;
                was_trivial = true;
                break;
            }
        if (!was_trivial && std::fabs(static_cast<double>(std::abs(z.value)) - circle) > std::sqrt(tol)) r.poles_on_circle = false;
    }
    return r;
}

Graph cycle_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Graph petersen_graph() {
    Graph g;
    g.vertex_count = 10;
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);
        g.edges.emplace_back(i, i + 5);
        g.edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

Graph joined_k4_pair() {
    Graph g;
    g.vertex_count = 8;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(i == 0 && j == 1)) g.edges.emplace_back(base + i, base + j);
    g.edges.emplace_back(0, 4);
    g.edges.emplace_back(1, 5);
    return g;
}

Graph necklace_graph(int beads) {
    if (beads < 2) fail(ErrorKind::InvalidArgument, "a necklace needs at least 2 beads");
    Graph g;
    g.vertex_count = 4 * beads;
    for (int b = 0; b < beads; ++b) {
        const int o = 4 * b;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(i == 0 && j == 1)) g.edges.emplace_back(o + i, o + j);
        g.edges.emplace_back(o + 1, (o + 4) % g.vertex_count);
    }
    return g;
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n <= degree || (static_cast<long>(n) * degree) % 2 != 0) fail(ErrorKind::InvalidArgument, "no simple regular graph with these parameters");
    std::mt19937_64 rng(seed);
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < degree; ++k) points.push_back(v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        Graph g;
        g.vertex_count = n;
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            const int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
            ok = u != v && seen.insert({u, v}).second;
            g.edges.emplace_back(u, v);
        }
        if (ok && g.is_connected()) return g;
    }
    fail(ErrorKind::ResourceLimit, "pairing model did not produce a simple connected graph");
}

Graph random_irregular_graph(int n, int chords, std::uint64_t seed) {
    if (n < 4) fail(ErrorKind::InvalidArgument, "need at least 4 vertices");
    const long max_chords = static_cast<long>(n) * (n - 3) / 2;
    if (chords < 0 || chords > max_chords) fail(ErrorKind::InvalidArgument, "too many chords");
    std::mt19937_64 rng(seed);
    Graph g = cycle_graph(n);
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : g.edges) seen.insert({std::min(u, v), std::max(u, v)});
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (chords > 0) {
        const int a = pick(rng), b = pick(rng);
        const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
        if (a == b || seen.count(e)) continue;
        seen.insert(e);
        g.edges.push_back(e);
        --chords;
    }
    return g;
}

}  // namespace a2zeta
