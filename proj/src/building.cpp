#include "a2zeta/building.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "a2zeta/errors.hpp"

namespace a2zeta {

// ------------------------------------------------------------ F_q[t]

namespace {

void trim(TPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

TPoly TPolyRing::add(const TPoly& a, const TPoly& b) const {
    TPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

TPoly TPolyRing::sub(const TPoly& a, const TPoly& b) const {
    TPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

TPoly TPolyRing::mul(const TPoly& a, const TPoly& b) const {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = field_.add(r[i + j], field_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

TPoly TPolyRing::scale(const TPoly& a, int c) const {
    TPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = field_.mul(a[i], c);
    trim(r);
    return r;
}

int TPolyRing::valuation(const TPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

TPoly TPolyRing::truncate(TPoly a, int degree_bound) {
    if (static_cast<int>(a.size()) > degree_bound) a.resize(static_cast<std::size_t>(std::max(degree_bound, 0)));
    trim(a);
    return a;
}

TPoly TPolyRing::shift_down(const TPoly& a, int k) {
    if (static_cast<int>(a.size()) <= k) return {};
    return TPoly(a.begin() + k, a.end());
}

TPoly TPolyRing::monomial(int c, int k) {
    if (c == 0) return {};
    TPoly r(static_cast<std::size_t>(k) + 1, 0);
    r[static_cast<std::size_t>(k)] = c;
    return r;
}

TPoly TPolyRing::unit_inverse(const TPoly& a, int bound) const {
    TPoly w(static_cast<std::size_t>(bound), 0);
    const int inv0 = field_.inv(a.at(0));
    for (int k = 0; k < bound; ++k) {
        // coefficient k of a*w must be [k == 0]
        int s = k == 0 ? 1 : 0;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
            s = field_.sub(s, field_.mul(a[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(k - i)]));
        w[static_cast<std::size_t>(k)] = field_.mul(s, inv0);
    }
    trim(w);
    return w;
}

Mat3 TPolyRing::mat_mul(const Mat3& a, const Mat3& b) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            TPoly s;
            for (int k = 0; k < 3; ++k) s = add(s, mul(a[static_cast<std::size_t>(3 * i + k)], b[static_cast<std::size_t>(3 * k + j)]));
            r[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return r;
}

namespace {

TPoly minor2(const TPolyRing& R, const Mat3& a, int r0, int r1, int c0, int c1) {
    auto at = [&](int i, int j) -> const TPoly& { return a[static_cast<std::size_t>(3 * i + j)]; };
    return R.sub(R.mul(at(r0, c0), at(r1, c1)), R.mul(at(r0, c1), at(r1, c0)));
}

}  // namespace

TPoly TPolyRing::det(const Mat3& a) const {
    TPoly d;
    for (int j = 0; j < 3; ++j) {
        const TPoly m = minor2(*this, a, 1, 2, (j + 1) % 3, (j + 2) % 3);
        d = add(d, mul(a[static_cast<std::size_t>(j)], m));
    }
    return d;
}

Mat3 TPolyRing::adjugate(const Mat3& a) const {
    Mat3 r;
    // adj[j][i] = cofactor(i, j); cyclic index order absorbs the sign.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[static_cast<std::size_t>(3 * j + i)] = minor2(*this, a, (i + 1) % 3, (i + 2) % 3, (j + 1) % 3, (j + 2) % 3);
    return r;
}

std::array<int, 3> TPolyRing::minor_valuations(const Mat3& a) const {
    auto better = [](int cur, int v) { return v < 0 ? cur : (cur < 0 ? v : std::min(cur, v)); };
    int d1 = -1, d2 = -1;
    for (const auto& e : a) d1 = better(d1, valuation(e));
    for (int r0 = 0; r0 < 3; ++r0)
        for (int r1 = r0 + 1; r1 < 3; ++r1)
            for (int c0 = 0; c0 < 3; ++c0)
                for (int c1 = c0 + 1; c1 < 3; ++c1) d2 = better(d2, valuation(minor2(*this, a, r0, r1, c0, c1)));
    return {d1, d2, valuation(det(a))};
}

TPoly TPolyRing::parse(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(ErrorKind::Parse, "empty polynomial");
    TPoly r;
    std::size_t i = 0;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (i != 0) {
            fail(ErrorKind::Parse, "bad polynomial '" + s + "'");
        }
        long coef = 1;
        bool have_coef = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stol(s.substr(i, j - i));
            have_coef = true;
            i = j;
        }
        int power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) fail(ErrorKind::Parse, "bad polynomial '" + s + "'");
            ++i;
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail(ErrorKind::Parse, "missing exponent in '" + s + "'");
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_coef) {
            fail(ErrorKind::Parse, "bad polynomial '" + s + "'");
        }
        const int q = field_.order();
        // prime fields reduce integers; extension fields take element codes
        int c;
        if (field_.characteristic() == q)
            c = static_cast<int>(coef % q);
        else if (coef >= 0 && coef < q)
            c = static_cast<int>(coef);
        else
            fail(ErrorKind::Parse, "coefficient " + std::to_string(coef) + " is not a field element code");
        if (neg) c = field_.neg(c);
        r = add(r, monomial(c, power));
    }
    return r;
}

std::string TPolyRing::format(const TPoly& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0 || a[k] != 1) out += std::to_string(a[k]);
        if (k >= 1) out += 't';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

// ------------------------------------------------------------ vertices

std::string BuildingVertex::key() const {
    std::string k;
    for (int x : a) k += static_cast<char>(x);
    for (const TPoly* p : {&x01, &x02, &x12}) {
        k += static_cast<char>(p->size());
        for (int c : *p) k += static_cast<char>(c);
    }
    return k;
}

Mat3 BuildingModel::identity() {
    Mat3 m;
    m[0] = m[4] = m[8] = TPoly{1};
    return m;
}

BuildingModel::BuildingModel(int q) : q_(q), ring_(q) {
    const auto t = [](int c, int k) { return TPolyRing::monomial(c, k); };
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Mat3 m = identity();
            m[0] = t(1, 1);
            m[1] = t(a, 0);
            m[2] = t(b, 0);
            reps1_.push_back(m);
        }
    for (int c = 0; c < q; ++c) {
        Mat3 m = identity();
        m[4] = t(1, 1);
        m[5] = t(c, 0);
        reps1_.push_back(m);
    }
    {
        Mat3 m = identity();
        m[8] = t(1, 1);
        reps1_.push_back(m);
    }
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
            Mat3 m = identity();
            m[0] = t(1, 1);
            m[4] = t(1, 1);
            m[2] = t(b, 0);
            m[5] = t(c, 0);
            reps2_.push_back(m);
        }
    for (int a = 0; a < q; ++a) {
        Mat3 m = identity();
        m[0] = t(1, 1);
        m[8] = t(1, 1);
        m[1] = t(a, 0);
        reps2_.push_back(m);
    }
    {
        Mat3 m = identity();
        m[4] = t(1, 1);
        m[8] = t(1, 1);
        reps2_.push_back(m);
    }
}

BuildingVertex BuildingModel::base() const { return BuildingVertex{}; }

BuildingVertex BuildingModel::canonicalize(const Mat3& g) const {
    const TPolyRing& R = ring_;
    const int vdet = TPolyRing::valuation(R.det(g));
    if (vdet < 0) fail(ErrorKind::SingularInput, "singular matrix has no lattice class");
    // t^vdet O^3 lies in the lattice, so arithmetic mod t^D is exact for D = vdet + 1.
    const int D = vdet + 1;
    Mat3 m;
    for (int i = 0; i < 9; ++i) m[static_cast<std::size_t>(i)] = TPolyRing::truncate(g[static_cast<std::size_t>(i)], D);
    auto at = [&](int i, int j) -> TPoly& { return m[static_cast<std::size_t>(3 * i + j)]; };
    auto col_axpy = [&](int dst, const TPoly& f, int src) {  // col_dst -= f * col_src
        for (int i = 0; i < 3; ++i) at(i, dst) = TPolyRing::truncate(R.sub(at(i, dst), R.mul(f, at(i, src))), D);
    };
    std::array<int, 3> a{};
    for (int k = 2; k >= 0; --k) {
        int best = -1, bv = -1;
        for (int j = 0; j <= k; ++j) {
            const int v = TPolyRing::valuation(at(k, j));
            if (v >= 0 && (best < 0 || v < bv)) {
                best = j;
                bv = v;
            }
        }
        if (best < 0) fail(ErrorKind::SingularInput, "lattice basis degenerated during reduction");
        if (best != k)
            for (int i = 0; i < 3; ++i) std::swap(at(i, best), at(i, k));
        const TPoly unit_inv = R.unit_inverse(TPolyRing::shift_down(at(k, k), bv), D);
        for (int i = 0; i < 3; ++i) at(i, k) = TPolyRing::truncate(R.mul(at(i, k), unit_inv), D);
        for (int j = 0; j < k; ++j) {
            if (at(k, j).empty()) continue;
            col_axpy(j, TPolyRing::shift_down(at(k, j), bv), k);
        }
        a[static_cast<std::size_t>(k)] = bv;
    }
    for (int j = 1; j < 3; ++j)
        for (int i = j - 1; i >= 0; --i) {
            const TPoly hi = TPolyRing::shift_down(at(i, j), a[static_cast<std::size_t>(i)]);
            if (!hi.empty()) col_axpy(j, hi, i);
        }
    int low = std::min({a[0], a[1], a[2]});
    for (const TPoly* p : {&at(0, 1), &at(0, 2), &at(1, 2)}) {
        const int v = TPolyRing::valuation(*p);
        if (v >= 0) low = std::min(low, v);
    }
    BuildingVertex v;
    for (int i = 0; i < 3; ++i) v.a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - low;
    v.x01 = TPolyRing::shift_down(at(0, 1), low);
    v.x02 = TPolyRing::shift_down(at(0, 2), low);
    v.x12 = TPolyRing::shift_down(at(1, 2), low);
    return v;
}

Mat3 BuildingModel::matrix(const BuildingVertex& v) const {
    Mat3 m;
    m[0] = TPolyRing::monomial(1, v.a[0]);
    m[4] = TPolyRing::monomial(1, v.a[1]);
    m[8] = TPolyRing::monomial(1, v.a[2]);
    m[1] = v.x01;
    m[2] = v.x02;
    m[5] = v.x12;
    return m;
}

int BuildingModel::type(const BuildingVertex& v) const { return (v.a[0] + v.a[1] + v.a[2]) % 3; }

const std::vector<Mat3>& BuildingModel::coset_representatives(int type) const {
    if (type != 1 && type != 2) fail(ErrorKind::InvalidArgument, "edge type must be 1 or 2");
    return type == 1 ? reps1_ : reps2_;
}

std::vector<BuildingVertex> BuildingModel::neighbors(const BuildingVertex& v, int type) const {
    const Mat3 g = matrix(v);
    std::vector<BuildingVertex> out;
    for (const Mat3& r : coset_representatives(type)) out.push_back(canonicalize(ring_.mat_mul(g, r)));
    return out;
}

RelativePosition BuildingModel::position_of(const Mat3& m) const {
    const auto d = ring_.minor_valuations(m);
    if (d[2] < 0) fail(ErrorKind::SingularInput, "relative position of a singular matrix");
    const int e1 = d[0], e2 = d[1] - d[0], e3 = d[2] - d[1];
    return {e3 - e2, e2 - e1};
}

RelativePosition BuildingModel::relative_position(const Mat3& g1, const Mat3& g2) const {
    // adj(g1) = det(g1) g1^{-1}; the scalar drops out projectively
    if (TPolyRing::valuation(ring_.det(g1)) < 0) fail(ErrorKind::SingularInput, "singular first argument");
    return position_of(ring_.mat_mul(ring_.adjugate(g1), g2));
}

RelativePosition BuildingModel::relative_position(const BuildingVertex& g1, const BuildingVertex& g2) const {
    return relative_position(matrix(g1), matrix(g2));
}

BigRat BuildingModel::canonical_algebraic_length(const Mat3& m) const {
    const TPolyRing& R = ring_;
    const TPoly det = R.det(m);
    if (det.empty()) fail(ErrorKind::SingularInput, "canonical length of a singular matrix");
    TPoly tr = R.add(R.add(m[0], m[4]), m[8]);
    TPoly s2;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) s2 = R.add(s2, minor2(R, m, i, j, i, j));
    // x^3 - tr x^2 + s2 x - det; signs do not affect valuations
    const std::array<int, 4> val{TPolyRing::valuation(det), TPolyRing::valuation(s2), TPolyRing::valuation(tr), 0};
    std::vector<int> hull{0};
    for (int i = 1; i <= 3; ++i) {
        if (val[static_cast<std::size_t>(i)] < 0) continue;
        while (hull.size() >= 2) {
            const int a = hull[hull.size() - 2], b = hull.back();
            // drop b if it lies on or above segment a -> i
            const long lhs = static_cast<long>(val[static_cast<std::size_t>(b)] - val[static_cast<std::size_t>(a)]) * (i - a);
            const long rhs = static_cast<long>(val[static_cast<std::size_t>(i)] - val[static_cast<std::size_t>(a)]) * (b - a);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<BigRat> roots;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const int a = hull[s], b = hull[s + 1];
        const BigRat slope(val[static_cast<std::size_t>(a)] - val[static_cast<std::size_t>(b)], b - a);
        for (int k = a; k < b; ++k) roots.push_back(slope);
    }
    BigRat sum = 0, low = roots.front();
    for (const auto& r : roots) {
        sum += r;
        if (r < low) low = r;
    }
    BigRat out = sum - 3 * low;
    out.canonicalize();
    return out;
}

Mat3 BuildingModel::parse_matrix(std::string_view text) const {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 3) fail(ErrorKind::Parse, "line " + std::to_string(rows.size() + 1) + ": expected 3 entries");
        rows.push_back(toks);
    }
    if (rows.size() != 3) fail(ErrorKind::Parse, "expected 3 matrix rows");
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(3 * i + j)] = ring_.parse(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

std::string BuildingModel::format_vertex(const BuildingVertex& v) const {
    const Mat3 m = matrix(v);
    std::string out = "[";
    for (int i = 0; i < 9; ++i) {
        out += ring_.format(m[static_cast<std::size_t>(i)]);
        out += (i == 8) ? "]" : (i % 3 == 2 ? "; " : " ");
    }
    return out;
}

// ------------------------------------------------------------ ball

int Ball::index_of(const BuildingVertex& v) const {
    const auto it = index.find(v.key());
    return it == index.end() ? -1 : it->second;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
    std::vector<std::size_t> s(static_cast<std::size_t>(radius) + 1, 0);
    for (int d : distance) ++s[static_cast<std::size_t>(d)];
    return s;
}

Ball build_ball(const BuildingModel& model, int radius, std::size_t cap) {
    if (radius < 0 || radius > 5) fail(ErrorKind::InvalidArgument, "ball radius must lie in [0, 5]");
    Ball b;
    b.q = model.q();
    b.radius = radius;
    auto add = [&](const BuildingVertex& v, int d) {
        auto [it, inserted] = b.index.emplace(v.key(), static_cast<int>(b.vertices.size()));
        if (inserted) {
            if (b.vertices.size() >= cap) fail(ErrorKind::ResourceLimit, "ball exceeds " + std::to_string(cap) + " vertices");
            b.vertices.push_back(v);
            b.distance.push_back(d);
        }
        return it->second;
    };
    add(model.base(), 0);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const int d = b.distance[i];
        if (d >= radius) break;
        const BuildingVertex v = b.vertices[i];
        for (int type = 1; type <= 2; ++type) {
            std::vector<int> ids;
            for (const auto& w : model.neighbors(v, type)) ids.push_back(add(w, d + 1));
            b.nbr[static_cast<std::size_t>(type - 1)].resize(b.vertices.size());
            b.nbr[static_cast<std::size_t>(type - 1)][i] = std::move(ids);
        }
    }
    for (auto& n : b.nbr) n.resize(b.vertices.size());
    return b;
}

LinkCheck base_link_check(const BuildingModel& model, const Ball& ball) {
    if (ball.radius < 1) fail(ErrorKind::BallTooSmall, "link check needs radius >= 1");
    const auto& left = ball.nbr[0][0];
    const auto& right = ball.nbr[1][0];
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            const auto p = model.relative_position(ball.vertices[static_cast<std::size_t>(left[i])], ball.vertices[static_cast<std::size_t>(right[j])]);
            if (p == RelativePosition{1, 0}) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return check_projective_link(left.size(), right.size(), edges, model.q());
}

// ------------------------------------------------------------ checks

TamagawaReport verify_tamagawa(const BuildingModel& model, const Ball& ball, int order) {
    if (order < 0) fail(ErrorKind::InvalidArgument, "order must be nonnegative");
    if (ball.radius < order + 1) fail(ErrorKind::BallTooSmall, "radius " + std::to_string(ball.radius) + " < N+1 = " + std::to_string(order + 1));
    const int q = model.q();
    const TPolyRing& R = model.ring();
    // f = Y delta: delta(1 - q^3 u^3) - u * [type-2 neighbors] + q u^2 * [type-1 neighbors]
    struct Term {
        Mat3 adj;
        IntPoly coeff;
    };
    std::vector<Term> support;
    const BigInt q3 = BigInt(q) * q * q;
    support.push_back({BuildingModel::identity(), IntPoly(std::vector<BigInt>{1, 0, 0, BigInt(-q3)})});
    for (int type = 1; type <= 2; ++type)
        for (int id : ball.nbr[static_cast<std::size_t>(type - 1)][0]) {
            const IntPoly c = type == 2 ? IntPoly::monomial(-1, 1) : IntPoly::monomial(q, 2);
            support.push_back({R.adjugate(model.matrix(ball.vertices[static_cast<std::size_t>(id)])), c});
        }
    TamagawaReport rep;
    rep.pass = true;
    const IntPoly expected_base = IntPoly::one_minus(1, 3);
    for (std::size_t x = 0; x < ball.vertices.size(); ++x) {
        const Mat3 hx = model.matrix(ball.vertices[x]);
        std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1);
        for (const Term& t : support) {
            // relpos(x, y) is relpos(y, x) with the two entries exchanged
            const RelativePosition yx = model.position_of(R.mat_mul(t.adj, hx));
            const int la = yx.m + 2 * yx.n;
            for (int k = 0; k + la <= order && k <= t.coeff.degree(); ++k) acc[static_cast<std::size_t>(k + la)] += t.coeff.coeff(static_cast<std::size_t>(k));
        }
        const IntPoly got(acc);
        IntPoly want = x == 0 ? expected_base : IntPoly();
        if (order < 3) want = x == 0 ? IntPoly(1) : IntPoly();
        if (x == 0) rep.base_value = got;
        ++rep.vertices_checked;
        if (got != want && rep.pass) {
            rep.pass = false;
            rep.detail = "vertex " + std::to_string(x) + " " + model.format_vertex(ball.vertices[x]) + ": got " + got.pretty() + ", expected " + want.pretty();
        }
    }
    return rep;
}

TamagawaReport verify_tamagawa(int q, int order, int radius) {
    if (radius < order + 1) fail(ErrorKind::BallTooSmall, "radius " + std::to_string(radius) + " < N+1 = " + std::to_string(order + 1));
    const BuildingModel model(q);
    return verify_tamagawa(model, build_ball(model, radius), order);
}

GeodesicReport verify_geodesic_criterion(const BuildingModel& model, const Ball& ball, int length) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "path length must be positive");
    if (ball.radius < length) fail(ErrorKind::BallTooSmall, "radius " + std::to_string(ball.radius) + " < n = " + std::to_string(length));
    GeodesicReport rep;
    const long q = model.q();
    rep.expected = static_cast<std::size_t>((q * q + q + 1));
    for (int i = 1; i < length; ++i) rep.expected *= static_cast<std::size_t>(q * q);
    std::map<int, std::size_t> hits;
    std::string bad;
    std::vector<int> path{0};
    std::function<void()> dfs = [&] {
        if (static_cast<int>(path.size()) == length + 1) {
            ++rep.paths;
            const int end = path.back();
            const auto p = model.relative_position(ball.vertices[0], ball.vertices[static_cast<std::size_t>(end)]);
            if (!(p == RelativePosition{length, 0}) && bad.empty())
                bad = "path ending at " + model.format_vertex(ball.vertices[static_cast<std::size_t>(end)]) + " has position (" + std::to_string(p.n) + "," + std::to_string(p.m) + ")";
            ++hits[end];
            return;
        }
        for (int w : ball.nbr[0][static_cast<std::size_t>(path.back())]) {
            if (path.size() >= 2) {
                const auto p = model.relative_position(ball.vertices[static_cast<std::size_t>(path[path.size() - 2])], ball.vertices[static_cast<std::size_t>(w)]);
                if (p == RelativePosition{0, 1}) continue;
            }
            path.push_back(w);
            dfs();
            path.pop_back();
        }
    };
    dfs();
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
        if (ball.distance[v] != length) continue;
        const auto p = model.relative_position(ball.vertices[0], ball.vertices[v]);
        if (!(p == RelativePosition{length, 0})) continue;
        ++rep.targets;
        const auto it = hits.find(static_cast<int>(v));
        const std::size_t c = it == hits.end() ? 0 : it->second;
        if (c != 1 && bad.empty()) bad = "vertex " + model.format_vertex(ball.vertices[v]) + " reached by " + std::to_string(c) + " paths";
    }
    rep.pass = bad.empty() && rep.paths == rep.targets && rep.paths == rep.expected;
    if (bad.empty() && !rep.pass)
        rep.detail = "paths " + std::to_string(rep.paths) + ", targets " + std::to_string(rep.targets) + ", expected " + std::to_string(rep.expected);
    else
        rep.detail = bad;
    return rep;
}

GeodesicReport verify_geodesic_criterion(int q, int length, int radius) {
    if (radius < length) fail(ErrorKind::BallTooSmall, "radius " + std::to_string(radius) + " < n = " + std::to_string(length));
    const BuildingModel model(q);
    return verify_geodesic_criterion(model, build_ball(model, radius), length);
}

}  // namespace a2zeta
