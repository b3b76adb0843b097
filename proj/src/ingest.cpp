#include "a2zeta/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "a2zeta/errors.hpp"

namespace a2zeta {

// ---------------------------------------------------------------- plane

int ProjectivePlane::line_through(int a, int b) const {
    for (int l : point_lines[static_cast<std::size_t>(a)])
        if (incident(b, l)) return l;
    return -1;
}

ProjectivePlane build_plane(int q) {
    ProjectivePlane plane;
    plane.field = FiniteField(q);
    plane.q = q;
    const FiniteField& F = plane.field;
    std::vector<std::array<int, 3>> vecs;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                const std::array<int, 3> v{a, b, c};
                const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
                if (first != v.end() && *first == 1) vecs.push_back(v);
            }
    std::sort(vecs.begin(), vecs.end());
    plane.points = vecs;
    plane.lines = vecs;
    const std::size_t n = vecs.size();
    plane.incidence_.assign(n * n, 0);
    plane.line_points.assign(n, {});
    plane.point_lines.assign(n, {});
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t l = 0; l < n; ++l) {
            int dot = 0;
            for (int k = 0; k < 3; ++k) dot = F.add(dot, F.mul(plane.points[p][k], plane.lines[l][k]));
            if (dot == 0) {
                plane.incidence_[p * n + l] = 1;
                plane.line_points[l].push_back(static_cast<int>(p));
                plane.point_lines[p].push_back(static_cast<int>(l));
            }
        }
    return plane;
}

std::string check_plane_axioms(const ProjectivePlane& plane) {
    const int q = plane.q;
    const std::size_t n = static_cast<std::size_t>(q * q + q + 1);
    if (plane.points.size() != n || plane.lines.size() != n) return "wrong number of points or lines";
    for (std::size_t i = 0; i < n; ++i) {
        if (plane.line_points[i].size() != static_cast<std::size_t>(q + 1)) return "line " + std::to_string(i) + " has wrong size";
        if (plane.point_lines[i].size() != static_cast<std::size_t>(q + 1)) return "point " + std::to_string(i) + " on wrong number of lines";
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            int joins = 0, meets = 0;
            for (std::size_t l = 0; l < n; ++l) {
                joins += plane.incident(static_cast<int>(a), static_cast<int>(l)) && plane.incident(static_cast<int>(b), static_cast<int>(l));
                meets += plane.incident(static_cast<int>(l), static_cast<int>(a)) && plane.incident(static_cast<int>(l), static_cast<int>(b));
            }
            if (joins != 1) return "points " + std::to_string(a) + "," + std::to_string(b) + " lie on " + std::to_string(joins) + " common lines";
            if (meets != 1) return "lines " + std::to_string(a) + "," + std::to_string(b) + " meet in " + std::to_string(meets) + " points";
        }
    return {};
}

// ---------------------------------------------------------- presentations

void check_presentation(const ProjectivePlane& plane, const TrianglePresentation& tp) {
    const int n = static_cast<int>(plane.size());
    const int q = plane.q;
    auto bad = [](const std::string& m) { fail(ErrorKind::PresentationInvalid, m); };
    if (tp.q != q) bad("presentation order differs from plane order");
    if (static_cast<int>(tp.lambda.size()) != n) bad("lambda must have one entry per point");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int l : tp.lambda) {
        if (l < 0 || l >= n) bad("lambda value out of range");
        if (seen[static_cast<std::size_t>(l)]++) bad("lambda is not a bijection");
    }
    std::set<std::array<int, 3>> T(tp.triples.begin(), tp.triples.end());
    if (T.size() != tp.triples.size()) bad("duplicate triple");
    for (const auto& t : T)
        for (int x : t)
            if (x < 0 || x >= n) bad("triple entry out of range");
    if (T.size() != static_cast<std::size_t>((q + 1) * n)) bad("|T| must equal (q+1)(q^2+q+1)");
    std::map<std::pair<int, int>, int> third;
    for (const auto& [x, y, z] : T) {
        if (!T.count({y, z, x})) bad("not closed under cyclic rotation");
        auto [it, inserted] = third.emplace(std::pair{x, y}, z);
        if (!inserted && it->second != z) bad("(x,y) determines two different z");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const bool has = third.count({x, y}) > 0;
            if (has != plane.incident(y, tp.lambda[static_cast<std::size_t>(x)]))
                bad("(x,y,*) in T must hold exactly when y lies on lambda(x)");
        }
}

namespace {

class PresentationSearch {
public:
    PresentationSearch(const ProjectivePlane& plane, std::uint64_t seed, std::uint64_t budget)
        : P(plane), n(static_cast<int>(plane.size())), q(plane.q), rng(seed), budget(budget) {
        lam.assign(static_cast<std::size_t>(n), -1);
        owner.assign(static_cast<std::size_t>(n), -1);
        req.assign(static_cast<std::size_t>(n), {});
        covered.assign(static_cast<std::size_t>(n * n), 0);
    }

    bool assign_line(int x, int l) {
        if (owner[static_cast<std::size_t>(l)] != -1) return false;
        for (int r : req[static_cast<std::size_t>(x)])
            if (!P.incident(r, l)) return false;
        lam[static_cast<std::size_t>(x)] = l;
        owner[static_cast<std::size_t>(l)] = x;
        trail.push_back({Op::Line, x, l});
        return true;
    }

    // Adds the rotation orbit of (x, y, z); returns false (state unchanged) on conflict.
    bool add_orbit(int x, int y, int z) {
        const std::size_t mark = trail.size();
        std::array<std::pair<int, int>, 3> slots{{{x, y}, {y, z}, {z, x}}};
        const int count = (x == y && y == z) ? 1 : 3;
        for (int k = 0; k < count; ++k) {
            const auto [a, b] = slots[static_cast<std::size_t>(k)];
            if (covered[static_cast<std::size_t>(a * n + b)] || !require(a, b)) {
                undo_to(mark);
                return false;
            }
            covered[static_cast<std::size_t>(a * n + b)] = 1;
            trail.push_back({Op::Slot, a, b});
        }
        orbits.push_back({x, y, z});
        trail.push_back({Op::Orbit, 0, 0});
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const Step s = trail.back();
            trail.pop_back();
            switch (s.op) {
            case Op::Line:
                lam[static_cast<std::size_t>(s.a)] = -1;
                owner[static_cast<std::size_t>(s.b)] = -1;
                break;
            case Op::Req: req[static_cast<std::size_t>(s.a)].pop_back(); break;
            case Op::Slot: covered[static_cast<std::size_t>(s.a * n + s.b)] = 0; break;
            case Op::Orbit: orbits.pop_back(); break;
            }
        }
    }

    // Depth-first search; calls `emit` on each complete presentation. Returns
    // false when the caller asked to stop or the budget is exhausted.
    bool run(const std::function<bool(const TrianglePresentation&)>& emit) {
        if (budget && ++nodes > budget) return false;
        // most constrained open slot at a point whose line is known
        int best_x = -1, best_y = -1;
        std::vector<int> best;
        bool have = false;
        for (int x = 0; x < n; ++x) {
            const int l = lam[static_cast<std::size_t>(x)];
            if (l < 0) continue;
            for (int y : P.line_points[static_cast<std::size_t>(l)]) {
                if (covered[static_cast<std::size_t>(x * n + y)]) continue;
                std::vector<int> cand;
                for (int z = 0; z < n; ++z) {
                    const std::size_t mark = trail.size();
                    if (add_orbit(x, y, z)) {
                        cand.push_back(z);
                        undo_to(mark);
                    }
                }
                if (!have || cand.size() < best.size()) {
                    have = true;
                    best_x = x;
                    best_y = y;
                    best = std::move(cand);
                    if (best.empty()) return true;
                }
            }
        }
        if (have) {
            std::shuffle(best.begin(), best.end(), rng);
            for (int z : best) {
                const std::size_t mark = trail.size();
                if (add_orbit(best_x, best_y, z)) {
                    if (!run(emit)) return false;
                }
                undo_to(mark);
            }
            return true;
        }
        // every assigned point is complete; branch on an unassigned point
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (lam[static_cast<std::size_t>(i)] < 0 && (x < 0 || req[static_cast<std::size_t>(i)].size() > req[static_cast<std::size_t>(x)].size())) x = i;
        if (x < 0) return emit(solution());
        std::vector<int> lines;
        for (int l = 0; l < n; ++l)
            if (owner[static_cast<std::size_t>(l)] < 0) lines.push_back(l);
        std::shuffle(lines.begin(), lines.end(), rng);
        for (int l : lines) {
            const std::size_t mark = trail.size();
            if (assign_line(x, l)) {
                if (!run(emit)) return false;
            }
            undo_to(mark);
        }
        return true;
    }

    TrianglePresentation solution() const {
        TrianglePresentation tp;
        tp.q = q;
        tp.lambda = lam;
        std::set<std::array<int, 3>> T;
        for (const auto& [x, y, z] : orbits) {
            T.insert({x, y, z});
            T.insert({y, z, x});
            T.insert({z, x, y});
        }
        tp.triples.assign(T.begin(), T.end());
        return tp;
    }

    std::vector<int> shuffled_lines_for_root() {
        std::vector<int> lines(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) lines[static_cast<std::size_t>(l)] = l;
        std::shuffle(lines.begin(), lines.end(), rng);
        return lines;
    }

private:
    enum class Op { Line, Req, Slot, Orbit };
    struct Step {
        Op op;
        int a, b;
    };

    // Record b in R[a], forcing lambda(a) when two requirements are known.
    bool require(int a, int b) {
        auto& r = req[static_cast<std::size_t>(a)];
        const int l = lam[static_cast<std::size_t>(a)];
        if (l >= 0 && !P.incident(b, l)) return false;
        r.push_back(b);
        trail.push_back({Op::Req, a, b});
        if (l < 0) {
            if (r.size() >= 2) {
                const int line = P.line_through(r[0], r[1]);
                if (!assign_line(a, line)) return false;
            } else {
                bool any = false;
                for (int cand : P.point_lines[static_cast<std::size_t>(b)])
                    if (owner[static_cast<std::size_t>(cand)] < 0) any = true;
                if (!any) return false;
            }
        }
        return true;
    }

    const ProjectivePlane& P;
    int n, q;
    std::mt19937_64 rng;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> lam, owner;
    std::vector<std::vector<int>> req;
    std::vector<std::uint8_t> covered;
    std::vector<std::array<int, 3>> orbits;
    std::vector<Step> trail;
};

}  // namespace

std::vector<TrianglePresentation> search_triangle_presentations(const ProjectivePlane& plane, const SearchOptions& opts) {
    std::vector<TrianglePresentation> out;
    if (opts.limit == 0) return out;
    std::vector<int> roots = PresentationSearch(plane, opts.seed, 0).shuffled_lines_for_root();

    auto explore = [&](std::size_t branch, std::size_t cap) {
        std::vector<TrianglePresentation> found;
        PresentationSearch s(plane, opts.seed * 0x9E3779B97F4A7C15ULL + branch + 1, opts.node_budget);
        if (!s.assign_line(0, roots[branch])) return found;
        s.run([&](const TrianglePresentation& tp) {
            found.push_back(tp);
            return found.size() < cap;
        });
        return found;
    };

    if (opts.jobs <= 1) {
        for (std::size_t b = 0; b < roots.size() && out.size() < opts.limit; ++b) {
            auto found = explore(b, opts.limit - out.size());
            out.insert(out.end(), found.begin(), found.end());
        }
        return out;
    }
    std::vector<std::vector<TrianglePresentation>> per_branch(roots.size());
    std::vector<std::thread> workers;
    const unsigned w = std::min<unsigned>(opts.jobs, static_cast<unsigned>(roots.size()));
    for (unsigned t = 0; t < w; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t b = t; b < roots.size(); b += w) per_branch[b] = explore(b, opts.limit);
        });
    for (auto& th : workers) th.join();
    for (auto& found : per_branch)
        for (auto& tp : found)
            if (out.size() < opts.limit) out.push_back(std::move(tp));
    return out;
}

TypedComplex complex_from_presentation(const ProjectivePlane& plane, const TrianglePresentation& tp) {
    check_presentation(plane, tp);
    const int n = static_cast<int>(plane.size());
    std::vector<Edge> edges(static_cast<std::size_t>(3 * n));
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < 3; ++i) edges[static_cast<std::size_t>(3 * x + i)] = {i, (i + 1) % 3};
    std::vector<ChamberEdges> chambers;
    chambers.reserve(tp.triples.size());
    for (const auto& [x, y, z] : tp.triples) chambers.push_back({3 * x + 0, 3 * y + 1, 3 * z + 2});
    return TypedComplex(tp.q, {0, 1, 2}, std::move(edges), std::move(chambers));
}

// ------------------------------------------------------------- file formats

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : is_(std::string(text)) {}

    // Next non-empty, non-comment line split into tokens.
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(is_, line)) {
            ++lineno_;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return toks;
        }
        error("unexpected end of file");
    }

    bool at_end() {
        std::string rest;
        std::streampos pos = is_.tellg();
        std::string line;
        while (std::getline(is_, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                is_.clear();
                is_.seekg(pos);
                return false;
            }
        }
        return true;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, "line " + std::to_string(lineno_) + ": " + msg);
    }

    long integer(const std::string& tok) const {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            error("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) error("expected an integer, got '" + tok + "'");
        return v;
    }

    std::vector<long> expect(const std::string& key, std::size_t args) {
        auto toks = next();
        if (toks[0] != key) error("expected '" + key + "', got '" + toks[0] + "'");
        if (toks.size() != args + 1) error("'" + key + "' takes " + std::to_string(args) + " arguments");
        std::vector<long> v;
        for (std::size_t i = 1; i < toks.size(); ++i) v.push_back(integer(toks[i]));
        return v;
    }

    std::size_t count(const std::string& key, long min) {
        const long v = expect(key, 1)[0];
        if (v < min) error("'" + key + "' must be at least " + std::to_string(min));
        return static_cast<std::size_t>(v);
    }

private:
    std::istringstream is_;
    int lineno_ = 0;
};

}  // namespace

TypedComplex parse_complex(std::string_view text) {
    LineReader r(text);
    auto header = r.next();
    if (header.size() != 2 || header[0] != "a2complex" || header[1] != "v1") r.error("expected header 'a2complex v1'");
    const long q = r.expect("q", 1)[0];
    if (q < 2) r.error("q must be at least 2");
    const std::size_t nv = r.count("vertices", 1);
    std::vector<int> types(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto v = r.expect("type", 2);
        if (v[0] != static_cast<long>(i)) r.error("vertex ids must be consecutive from 0");
        if (v[1] < 0 || v[1] > 2) r.error("vertex type must be 0, 1 or 2");
        types[i] = static_cast<int>(v[1]);
    }
    const std::size_t ne = r.count("edges", 0);
    std::vector<Edge> edges(ne);
    for (std::size_t i = 0; i < ne; ++i) {
        auto v = r.expect("edge", 3);
        if (v[0] != static_cast<long>(i)) r.error("edge ids must be consecutive from 0");
        edges[i] = {static_cast<int>(v[1]), static_cast<int>(v[2])};
    }
    const std::size_t nc = r.count("chambers", 0);
    std::vector<ChamberEdges> chambers(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        auto v = r.expect("chamber", 3);
        chambers[i] = {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
    }
    if (!r.at_end()) r.error("trailing content");
    return TypedComplex(static_cast<int>(q), std::move(types), std::move(edges), std::move(chambers));
}

std::string serialize_complex(const TypedComplex& cx) {
    std::ostringstream os;
    os << "a2complex v1\n";
    os << "q " << cx.q() << "\n";
    os << "vertices " << cx.vertex_count() << "\n";
    for (std::size_t i = 0; i < cx.vertex_count(); ++i) os << "type " << i << ' ' << cx.vertex_types()[i] << "\n";
    os << "edges " << cx.edge_count() << "\n";
    for (std::size_t i = 0; i < cx.edge_count(); ++i) os << "edge " << i << ' ' << cx.edges()[i].src << ' ' << cx.edges()[i].dst << "\n";
    os << "chambers " << cx.chamber_count() << "\n";
    for (const auto& c : cx.chambers()) os << "chamber " << c[0] << ' ' << c[1] << ' ' << c[2] << "\n";
    return os.str();
}

TrianglePresentation parse_presentation(std::string_view text) {
    LineReader r(text);
    auto header = r.next();
    if (header.size() != 2 || header[0] != "trianglepres" || header[1] != "v1") r.error("expected header 'trianglepres v1'");
    TrianglePresentation tp;
    const long q = r.expect("q", 1)[0];
    if (q < 2) r.error("q must be at least 2");
    tp.q = static_cast<int>(q);
    const std::size_t n = static_cast<std::size_t>(q * q + q + 1);
    tp.lambda.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = r.expect("lambda", 2);
        if (v[0] < 0 || v[0] >= static_cast<long>(n)) r.error("lambda point out of range");
        tp.lambda[static_cast<std::size_t>(v[0])] = static_cast<int>(v[1]);
    }
    while (!r.at_end()) {
        auto v = r.expect("triple", 3);
        tp.triples.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
    }
    std::sort(tp.triples.begin(), tp.triples.end());
    return tp;
}

std::string serialize_presentation(const TrianglePresentation& tp) {
    std::ostringstream os;
    os << "trianglepres v1\n";
    os << "q " << tp.q << "\n";
    for (std::size_t i = 0; i < tp.lambda.size(); ++i) os << "lambda " << i << ' ' << tp.lambda[i] << "\n";
    for (const auto& t : tp.triples) os << "triple " << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
    out << contents;
}

}  // namespace a2zeta
