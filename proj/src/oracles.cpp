#include "a2zeta/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "a2zeta/errors.hpp"
#include "a2zeta/operators.hpp"

namespace a2zeta {

namespace {

// Neighbor rules recomputed here from the raw chamber list so that the
// oracles share no code with the operator builders.
struct LocalRules {
    std::vector<std::vector<int>> edge_next;     // e -> admissible f
    std::vector<std::vector<int>> chamber_next;  // 3c+s -> admissible 3c'+s'

    explicit LocalRules(const TypedComplex& cx) {
        const std::size_t ne = cx.edge_count();
        std::set<std::pair<int, int>> in_chamber;
        std::vector<std::vector<std::pair<int, int>>> holders(ne);  // edge -> (chamber, position)
        for (std::size_t c = 0; c < cx.chamber_count(); ++c) {
            const auto& ch = cx.chambers()[c];
            for (int k = 0; k < 3; ++k) {
                in_chamber.insert({ch[static_cast<std::size_t>(k)], ch[static_cast<std::size_t>((k + 1) % 3)]});
                holders[static_cast<std::size_t>(ch[static_cast<std::size_t>(k)])].emplace_back(static_cast<int>(c), k);
            }
        }
        edge_next.resize(ne);
        for (std::size_t e = 0; e < ne; ++e)
            for (std::size_t f = 0; f < ne; ++f)
                if (cx.edges()[e].dst == cx.edges()[f].src && !in_chamber.count({static_cast<int>(e), static_cast<int>(f)}))
                    edge_next[e].push_back(static_cast<int>(f));
        chamber_next.resize(3 * cx.chamber_count());
        for (std::size_t c = 0; c < cx.chamber_count(); ++c)
            for (int s = 0; s < 3; ++s) {
                const int middle = cx.chambers()[c][static_cast<std::size_t>((s + 1) % 3)];
                for (const auto& [c2, k] : holders[static_cast<std::size_t>(middle)])
                    if (c2 != static_cast<int>(c)) chamber_next[3 * c + static_cast<std::size_t>(s)].push_back(3 * c2 + (k + 1) % 3);
                std::sort(chamber_next[3 * c + static_cast<std::size_t>(s)].begin(), chamber_next[3 * c + static_cast<std::size_t>(s)].end());
            }
    }
};

// Closed walks of the given length in the successor graph, counted per start.
std::uint64_t count_closed(const std::vector<std::vector<int>>& next, int length, const OracleOptions& opts) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "length must be positive");
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    const std::size_t n = next.size();
    std::vector<std::uint64_t> per_start(n, 0);
    auto run = [&](std::size_t start) {
        std::uint64_t found = 0;
        std::function<void(int, int)> dfs = [&](int cur, int depth) {
            if (exhausted) return;
            if (++nodes > opts.node_budget) {
                exhausted = true;
                return;
            }
            const auto& succ = next[static_cast<std::size_t>(cur)];
            if (depth == length) {
                if (std::binary_search(succ.begin(), succ.end(), static_cast<int>(start))) ++found;
                return;
            }
            for (int w : succ) dfs(w, depth + 1);
        };
        dfs(static_cast<int>(start), 1);
        per_start[start] = found;
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t s = 0; s < n; ++s) run(s);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t s = t; s < n; s += jobs) run(s);
            });
        for (auto& th : pool) th.join();
    }
    if (exhausted) fail(ErrorKind::ResourceLimit, "oracle exceeded " + std::to_string(opts.node_budget) + " search nodes");
    std::uint64_t total = 0;
    for (auto c : per_start) total += c;
    return total;
}

}  // namespace

std::uint64_t count_type1_geodesics(const TypedComplex& cx, int length, const OracleOptions& opts) {
    LocalRules rules(cx);
    for (auto& v : rules.edge_next) std::sort(v.begin(), v.end());
    return count_closed(rules.edge_next, length, opts);
}

std::uint64_t count_galleries(const TypedComplex& cx, int length, const OracleOptions& opts) {
    return count_closed(LocalRules(cx).chamber_next, length, opts);
}

std::vector<Gallery> enumerate_galleries(const TypedComplex& cx, int length, const OracleOptions& opts) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "length must be positive");
    const LocalRules rules(cx);
    std::vector<Gallery> out;
    std::vector<int> path;
    std::uint64_t nodes = 0;
    std::function<void()> dfs = [&] {
        if (++nodes > opts.node_budget) fail(ErrorKind::ResourceLimit, "gallery enumeration exceeded " + std::to_string(opts.node_budget) + " search nodes");
        const auto& succ = rules.chamber_next[static_cast<std::size_t>(path.back())];
        if (static_cast<int>(path.size()) == length) {
            if (std::binary_search(succ.begin(), succ.end(), path.front())) {
                Gallery g;
                for (int x : path) g.push_back({x / 3, x % 3});
                out.push_back(std::move(g));
            }
            return;
        }
        for (int w : succ) {
            path.push_back(w);
            dfs();
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < rules.chamber_next.size(); ++s) {
        path.assign(1, static_cast<int>(s));
        dfs();
    }
    return out;
}

std::vector<std::vector<int>> gallery_boundary(const TypedComplex& cx, const Gallery& g) {
    const std::size_t L = g.size();
    if (L == 0 || L % 3 != 0) fail(ErrorKind::NotAGallery, "gallery length must be a positive multiple of 3");
    const LocalRules rules(cx);
    for (std::size_t i = 0; i < L; ++i) {
        const auto& a = g[i];
        const auto& b = g[(i + 1) % L];
        if (a.chamber < 0 || static_cast<std::size_t>(a.chamber) >= cx.chamber_count() || a.slot < 0 || a.slot > 2)
            fail(ErrorKind::NotAGallery, "directed chamber out of range at position " + std::to_string(i));
        const auto& succ = rules.chamber_next[static_cast<std::size_t>(3 * a.chamber + a.slot)];
        if (!std::binary_search(succ.begin(), succ.end(), 3 * b.chamber + b.slot))
            fail(ErrorKind::NotAGallery, "step " + std::to_string(i) + " is not a gallery step");
    }
    auto edge = [&](std::size_t i) { return cx.chambers()[static_cast<std::size_t>(g[i].chamber)][static_cast<std::size_t>(g[i].slot)]; };
    std::vector<std::vector<int>> cycles;
    if (L % 2 == 0) {
        cycles.resize(2);
        for (std::size_t i = 0; i < L; ++i) cycles[i % 2].push_back(edge(i));
    } else {
        cycles.resize(1);
        for (std::size_t i = 0; i < L; i += 2) cycles[0].push_back(edge(i));
        for (std::size_t i = 1; i < L; i += 2) cycles[0].push_back(edge(i));
    }
    return cycles;
}

namespace {

bool is_rotation(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s)
        if (std::equal(a.begin(), a.end() - static_cast<long>(s), b.begin() + static_cast<long>(s)) &&
            std::equal(a.end() - static_cast<long>(s), a.end(), b.begin()))
            return true;
    return a.empty();
}

}  // namespace

BoundaryReport check_gallery_boundaries(const TypedComplex& cx, int length, const OracleOptions& opts) {
    BoundaryReport rep;
    const SparseOperator le = edge_operator(cx);
    const auto galleries = enumerate_galleries(cx, length, opts);
    rep.galleries = galleries.size();
    const std::size_t want_cycles = length % 2 == 0 ? 2 : 1;
    const std::size_t want_len = length % 2 == 0 ? static_cast<std::size_t>(length) / 2 : static_cast<std::size_t>(length);
    auto note = [&](const std::string& s) {
        if (rep.detail.empty()) rep.detail = s;
    };
    for (std::size_t gi = 0; gi < galleries.size(); ++gi) {
        const Gallery& g = galleries[gi];
        const auto cycles = gallery_boundary(cx, g);
        rep.cycles += cycles.size();
        if (cycles.size() != want_cycles) note("gallery " + std::to_string(gi) + ": wrong number of boundary cycles");
        for (const auto& c : cycles) {
            if (c.size() != want_len) note("gallery " + std::to_string(gi) + ": boundary cycle of length " + std::to_string(c.size()));
            for (std::size_t i = 0; i < c.size(); ++i)
                if (le.at(static_cast<std::size_t>(c[i]), static_cast<std::size_t>(c[(i + 1) % c.size()])) != 1)
                    note("gallery " + std::to_string(gi) + ": boundary step " + std::to_string(c[i]) + " -> " + std::to_string(c[(i + 1) % c.size()]) + " is not in L_E");
        }
        Gallery shifted(g.begin() + 1, g.end());
        shifted.push_back(g.front());
        const auto moved = gallery_boundary(cx, shifted);
        for (const auto& c : moved) {
            bool matched = false;
            for (const auto& d : cycles) matched = matched || is_rotation(c, d);
            if (!matched) note("gallery " + std::to_string(gi) + ": shifted boundary is not a rotation of the original");
        }
    }
    rep.pass = rep.detail.empty();
    return rep;
}

}  // namespace a2zeta
