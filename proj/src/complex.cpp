#include "a2zeta/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "a2zeta/errors.hpp"

namespace a2zeta {
namespace {

ChamberEdges least_rotation(const ChamberEdges& c) {
    ChamberEdges best = c;
    for (int r = 1; r < 3; ++r) {
        ChamberEdges rot{c[r], c[(r + 1) % 3], c[(r + 2) % 3]};
        if (rot < best) best = rot;
    }
    return best;
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

TypedComplex::TypedComplex(int q, std::vector<int> vertex_type, std::vector<Edge> edges,
                           std::vector<ChamberEdges> chambers)
    : q_(q), type_(std::move(vertex_type)), edges_(std::move(edges)), chambers_(std::move(chambers)) {
    if (q_ < 2) fail(ErrorKind::InvalidArgument, "q must be at least 2");
    if (type_.empty()) fail(ErrorKind::InvalidArgument, "complex needs at least one vertex");
    const long nv = static_cast<long>(type_.size());
    const long ne = static_cast<long>(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv)
            fail(ErrorKind::IndexOutOfRange, "edge " + str(static_cast<long>(i)) + " has an endpoint outside 0.." + str(nv - 1));
    }
    edge_chambers_.assign(edges_.size(), {});
    for (std::size_t i = 0; i < chambers_.size(); ++i) {
        for (int id : chambers_[i])
            if (id < 0 || id >= ne)
                fail(ErrorKind::IndexOutOfRange, "chamber " + str(static_cast<long>(i)) + " references missing edge " + str(id));
        chambers_[i] = least_rotation(chambers_[i]);
    }
    for (std::size_t i = 0; i < chambers_.size(); ++i)
        for (int id : chambers_[i]) {
            auto& list = edge_chambers_[static_cast<std::size_t>(id)];
            if (list.empty() || list.back() != static_cast<int>(i)) list.push_back(static_cast<int>(i));
        }
}

std::vector<DirectedChamber> directed_chambers(const TypedComplex& complex) {
    std::vector<DirectedChamber> out;
    out.reserve(complex.chamber_count() * 3);
    for (std::size_t c = 0; c < complex.chamber_count(); ++c)
        for (int s = 0; s < 3; ++s) out.push_back({static_cast<int>(c), s});
    return out;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const Check* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass && !c.warning_only) return &c;
    return nullptr;
}

const Check* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

LinkCheck check_projective_link(std::size_t left, std::size_t right, const std::vector<std::pair<int, int>>& edges,
                                int q) {
    const std::size_t n = static_cast<std::size_t>(q * q + q + 1);
    if (left != n || right != n)
        return {false, "sides have " + str(static_cast<long>(left)) + " and " + str(static_cast<long>(right)) +
                           " vertices, expected " + str(static_cast<long>(n))};
    std::vector<std::vector<int>> adj_l(left), adj_r(right);
    for (const auto& [l, r] : edges) {
        adj_l[static_cast<std::size_t>(l)].push_back(r);
        adj_r[static_cast<std::size_t>(r)].push_back(l);
    }
    auto side_ok = [&](std::vector<std::vector<int>>& adj, const char* side) -> LinkCheck {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            auto& a = adj[v];
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                return {false, std::string(side) + " vertex " + str(static_cast<long>(v)) + " has a multiple link edge"};
            if (a.size() != static_cast<std::size_t>(q + 1))
                return {false, std::string(side) + " vertex " + str(static_cast<long>(v)) + " has degree " +
                                   str(static_cast<long>(a.size()))};
        }
        for (std::size_t v = 0; v < adj.size(); ++v)
            for (std::size_t w = v + 1; w < adj.size(); ++w) {
                std::vector<int> common;
                std::set_intersection(adj[v].begin(), adj[v].end(), adj[w].begin(), adj[w].end(),
                                      std::back_inserter(common));
                if (common.size() != 1)
                    return {false, std::string(side) + " vertices " + str(static_cast<long>(v)) + "," +
                                       str(static_cast<long>(w)) + " have " + str(static_cast<long>(common.size())) +
                                       " common neighbours"};
            }
        return {};
    };
    if (auto r = side_ok(adj_l, "left"); !r.pass) return r;
    return side_ok(adj_r, "right");
}

bool is_connected(const TypedComplex& complex) {
    const std::size_t nv = complex.vertex_count();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::size_t components = nv;
    for (const auto& e : complex.edges()) {
        const int a = find(e.src), b = find(e.dst);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

long euler_characteristic(const TypedComplex& complex) {
    return static_cast<long>(complex.vertex_count()) - static_cast<long>(complex.edge_count()) +
           static_cast<long>(complex.chamber_count());
}

long euler_characteristic_formula(int q, std::size_t vertex_count) {
    const long num = static_cast<long>(q + 1) * (q - 1) * (q - 1) * static_cast<long>(vertex_count);
    return num / 3;
}

ValidationReport validate(const TypedComplex& cx) {
    using namespace check_names;
    ValidationReport rep;
    const int q = cx.q();
    const long deg = static_cast<long>(q) * q + q + 1;
    const std::size_t nv = cx.vertex_count();
    auto add = [&](const char* name, bool pass, std::string detail = {}, bool warning = false) {
        rep.checks.push_back({name, pass, warning, pass ? std::string{} : std::move(detail)});
    };

    {
        std::string bad;
        for (std::size_t v = 0; v < nv && bad.empty(); ++v) {
            const int t = cx.vertex_types()[v];
            if (t < 0 || t > 2) bad = "vertex " + str(static_cast<long>(v)) + " has type " + str(t);
        }
        add(kTypeRange, bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < cx.edge_count() && bad.empty(); ++i) {
            const auto& e = cx.edges()[i];
            const int ts = cx.vertex_types()[static_cast<std::size_t>(e.src)];
            const int td = cx.vertex_types()[static_cast<std::size_t>(e.dst)];
            if (((ts + 1) % 3 + 3) % 3 != td)
                bad = "edge " + str(static_cast<long>(i)) + ": type(dst)=" + str(td) + " but type(src)+1=" + str((ts + 1) % 3);
        }
        add(kTypeIncrement, bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t c = 0; c < cx.chamber_count() && bad.empty(); ++c) {
            const auto& ch = cx.chambers()[c];
            for (int k = 0; k < 3; ++k)
                if (cx.edge(ch[k]).dst != cx.edge(ch[(k + 1) % 3]).src) {
                    bad = "chamber " + str(static_cast<long>(c)) + " is not a closed triangle";
                    break;
                }
        }
        add(kChamberClosure, bad.empty(), bad);
    }
    std::vector<long> outdeg(nv, 0), indeg(nv, 0);
    for (const auto& e : cx.edges()) {
        ++outdeg[static_cast<std::size_t>(e.src)];
        ++indeg[static_cast<std::size_t>(e.dst)];
    }
    auto degree_check = [&](const char* name, const std::vector<long>& d) {
        std::string bad;
        for (std::size_t v = 0; v < nv && bad.empty(); ++v)
            if (d[v] != deg) bad = "vertex " + str(static_cast<long>(v)) + " has degree " + str(d[v]);
        add(name, bad.empty(), bad);
    };
    degree_check(kOutDegree, outdeg);
    degree_check(kInDegree, indeg);
    {
        std::string bad;
        for (std::size_t i = 0; i < cx.edge_count() && bad.empty(); ++i) {
            const auto n = static_cast<long>(cx.chambers_of_edge()[i].size());
            if (n != q + 1) bad = "edge " + str(static_cast<long>(i)) + " lies in " + str(n) + " chambers";
        }
        add(kEdgeChambers, bad.empty(), bad);
    }
    add(kEdgeCount, static_cast<long>(cx.edge_count()) == deg * static_cast<long>(nv),
        "found " + str(static_cast<long>(cx.edge_count())));
    {
        const long num = static_cast<long>(q + 1) * deg * static_cast<long>(nv);
        const bool ok = num % 3 == 0 && static_cast<long>(cx.chamber_count()) == num / 3;
        add(kChamberCount, ok, "found " + str(static_cast<long>(cx.chamber_count())) + ", (q+1)(q^2+q+1)V = " + str(num));
    }
    {
        // local link graph at every vertex
        std::vector<std::vector<int>> out_edges(nv), in_edges(nv);
        for (std::size_t i = 0; i < cx.edge_count(); ++i) {
            out_edges[static_cast<std::size_t>(cx.edges()[i].src)].push_back(static_cast<int>(i));
            in_edges[static_cast<std::size_t>(cx.edges()[i].dst)].push_back(static_cast<int>(i));
        }
        std::vector<std::vector<std::pair<int, int>>> link(nv);  // (out-edge id, in-edge id)
        for (const auto& ch : cx.chambers()) {
            for (int k = 0; k < 3; ++k) {
                const int out = ch[k];
                const int in = ch[(k + 2) % 3];
                link[static_cast<std::size_t>(cx.edge(out).src)].push_back({out, in});
            }
        }
        std::string bad;
        std::vector<int> local(cx.edge_count(), -1);
        for (std::size_t v = 0; v < nv && bad.empty(); ++v) {
            for (std::size_t k = 0; k < out_edges[v].size(); ++k) local[static_cast<std::size_t>(out_edges[v][k])] = static_cast<int>(k);
            std::vector<int> local_in(cx.edge_count(), -1);
            for (std::size_t k = 0; k < in_edges[v].size(); ++k) local_in[static_cast<std::size_t>(in_edges[v][k])] = static_cast<int>(k);
            std::vector<std::pair<int, int>> edges;
            for (const auto& [o, i] : link[v]) {
                const int lo = local[static_cast<std::size_t>(o)];
                const int li = local_in[static_cast<std::size_t>(i)];
                if (lo < 0 || li < 0) {
                    bad = "vertex " + str(static_cast<long>(v)) + ": chamber corner is not an out/in edge pair";
                    break;
                }
                edges.push_back({lo, li});
            }
            if (!bad.empty()) break;
            auto r = check_projective_link(out_edges[v].size(), in_edges[v].size(), edges, q);
            if (!r.pass) bad = "vertex " + str(static_cast<long>(v)) + ": " + r.detail;
        }
        add(kLink, bad.empty(), bad);
    }
    {
        const long counted = euler_characteristic(cx);
        const long num = static_cast<long>(q + 1) * (q - 1) * (q - 1) * static_cast<long>(nv);
        const bool ok = num % 3 == 0 && counted == num / 3;
        add(kEuler, ok, "V-E+C = " + str(counted) + ", (q+1)(q-1)^2V/3 = " + str(num) + "/3");
    }
    add(kConnected, is_connected(cx), "complex is disconnected", /*warning=*/true);
    return rep;
}

void require_valid(const TypedComplex& complex) {
    const auto rep = validate(complex);
    if (const Check* c = rep.first_failure()) fail(ErrorKind::ValidationFailure, c->name + ": " + c->detail);
}

void require_valid_connected(const TypedComplex& complex) {
    require_valid(complex);
    if (!is_connected(complex))
        fail(ErrorKind::ValidationFailure, "complex is disconnected; per-component processing is not supported");
}

}  // namespace a2zeta
