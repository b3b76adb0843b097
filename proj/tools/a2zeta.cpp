#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "a2zeta/building.hpp"
#include "a2zeta/complex.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/graph.hpp"
#include "a2zeta/ingest.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/oracles.hpp"
#include "a2zeta/satake.hpp"
#include "a2zeta/zeta.hpp"

namespace {

using namespace a2zeta;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Text mode: "[section]" headers and "  key: value" lines.
// Records mode: one "section.key=value" line per field.
class Report {
public:
    explicit Report(bool records) : records_(records) {}

    void section(const std::string& name) {
        section_ = name;
        if (!records_) std::cout << '[' << name << "]\n";
    }
    void field(const std::string& key, const std::string& value) {
        if (records_)
            std::cout << record_key(section_) << '.' << record_key(key) << '=' << value << '\n';
        else
            std::cout << "  " << key << ": " << value << '\n';
    }
    void field(const std::string& key, long long v) { field(key, std::to_string(v)); }
    void field(const std::string& key, unsigned long long v) { field(key, std::to_string(v)); }
    void field(const std::string& key, int v) { field(key, std::to_string(v)); }
    void field(const std::string& key, std::size_t v) { field(key, std::to_string(v)); }
    void field(const std::string& key, long v) { field(key, std::to_string(v)); }
    void field(const std::string& key, bool v) { field(key, std::string(v ? "true" : "false")); }
    void field(const std::string& key, const char* v) { field(key, std::string(v)); }
    void poly(const std::string& key, const IntPoly& p) {
        field(key, p.to_string());
        if (!records_) field(key + " (expanded)", p.pretty());
    }
    void rational(const std::string& key, const RationalFunction& r) {
        poly(key + ".num", r.num());
        poly(key + ".den", r.den());
    }
    void series(const std::string& key, const Series& s) { field(key, s.to_string()); }
    int verdict(bool pass) {
        section("result");
        field("status", pass ? "PASS" : "FAIL");
        return pass ? kPass : kCheckFailed;
    }

private:
    static std::string record_key(std::string k) {
        for (char& c : k)
            if (c == ' ') c = '_';
        return k;
    }

    bool records_;
    std::string section_ = "main";
};

std::string approx(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string root_line(const ClassifiedRoot& r) {
    return approx(r.value.real()) + ' ' + approx(r.value.imag()) + ' ' + approx(r.modulus) + ' ' + r.cls;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ValidationFailure:
        case ErrorKind::RootFindingFailure:
            return kCheckFailed;
        default:
            return kUsage;
    }
}

struct Globals {
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t node_budget = 10'000'000;
};

TypedComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

int cmd_validate(Report& out, const std::string& path) {
    const TypedComplex cx = load_complex(path);
    const ValidationReport rep = validate(cx);
    out.section("validate");
    out.field("file", path);
    out.field("q", cx.q());
    out.field("vertices", cx.vertex_count());
    out.field("edges", cx.edge_count());
    out.field("chambers", cx.chamber_count());
    for (const Check& c : rep.checks) {
        const char* state = c.pass ? "PASS" : (c.warning_only ? "WARN" : "FAIL");
        out.field(c.name, std::string(state) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
    if (const Check* f = rep.first_failure()) out.field("first failing invariant", f->name);
    return out.verdict(rep.ok());
}

int cmd_operators(Report& out, const std::string& path, const std::string& dir) {
    const TypedComplex cx = load_complex(path);
    require_valid(cx);
    std::filesystem::create_directories(dir);
    const VertexHecke vh = vertex_hecke(cx);
    const std::vector<std::pair<std::string, SparseOperator>> ops = {
        {"A1", vh.a1}, {"A2", vh.a2}, {"LE", edge_operator(cx)}, {"LB", chamber_operator(cx)}};
    out.section("operators");
    for (const auto& [name, op] : ops) {
        const std::string file = (std::filesystem::path(dir) / (name + ".sparse")).string();
        write_file(file, serialize_sparse(op));
        out.field(name, std::to_string(op.rows()) + "x" + std::to_string(op.cols()) + " nnz " + std::to_string(op.nnz()) + " -> " + file);
    }
    return kPass;
}

int cmd_zeta(Report& out, const Globals& g, const std::string& path, const std::string& which) {
    const ZetaBundle b = zeta_bundle(load_complex(path), DetOptions{g.jobs});
    const ZetaFunctions z = zeta_functions(b);
    out.section("zeta");
    out.field("q", b.q);
    out.field("chi", b.chi);
    if (which == "vertex") {
        out.poly("dvertex", b.dvertex);
        const IntPoly cube = IntPoly::one_minus(1, 3).pow(static_cast<unsigned>(b.chi < 0 ? -b.chi : b.chi));
        out.rational("vertex_zeta", b.chi >= 0 ? RationalFunction(cube, b.dvertex) : RationalFunction(IntPoly(1), cube * b.dvertex));
    } else if (which == "edge") {
        out.poly("det(I - L_E u)", b.pe);
        out.rational("Z1", z.z1);
    } else if (which == "gallery") {
        out.poly("det(I + L_B u)", b.pb);
        out.rational("Z2", z.z2);
    } else if (which == "minus") {
        out.rational("Zminus", z.zminus);
    } else {
        out.rational("Z", z.z);
    }
    return kPass;
}

int cmd_check_identity(Report& out, const Globals& g, const std::string& path) {
    const ZetaBundle b = zeta_bundle(load_complex(path), DetOptions{g.jobs});
    const IdentityReport r = check_main_identity(b);
    out.section("identity");
    out.field("q", b.q);
    out.field("chi", b.chi);
    out.poly("dvertex", b.dvertex);
    out.poly("det(I - L_E u)", b.pe);
    out.poly("det(I + L_B u)", b.pb);
    out.field("lhs degree", r.lhs.degree());
    out.field("rhs degree", r.rhs.degree());
    out.poly("residual", r.residual);
    return out.verdict(r.pass);
}

int cmd_check_ramanujan(Report& out, const Globals& g, const std::string& path, double tol) {
    const ZetaBundle b = zeta_bundle(load_complex(path), DetOptions{g.jobs});
    const RamanujanReport r = ramanujan_check(b, tol);
    out.section("ramanujan");
    out.field("q", b.q);
    out.field("tol", approx(tol));
    out.field("trivial zeros found", r.dvertex.trivial_found);
    out.field("trivial surplus", r.dvertex.surplus);
    for (const std::string& m : r.dvertex.missing) out.field("missing trivial zero", m);
    out.section("dvertex roots (approx; re im modulus class)");
    for (const ClassifiedRoot& c : r.dvertex.roots) out.field("root", root_line(c));
    out.section("det(I + L_B u) modulus histogram (approx)");
    for (const ModulusBin& m : r.pb_histogram) out.field(m.label, std::to_string(m.count) + " at " + approx(m.modulus));
    out.section("det(I - L_E u) modulus histogram (approx)");
    for (const ModulusBin& m : r.pe_histogram) out.field(m.label, std::to_string(m.count) + " at " + approx(m.modulus));
    out.section("verdict");
    out.field("criterion", r.ramanujan ? "RAMANUJAN" : "NOT RAMANUJAN");
    return out.verdict(r.ramanujan);
}

int cmd_check_section9(Report& out, const Globals& g, const std::string& path, int degree) {
    if (degree < 1) fail(ErrorKind::InvalidArgument, "--degree must be positive");
    const SeriesIdentityReport r = check_section9_series(load_complex(path), static_cast<std::size_t>(degree), DetOptions{g.jobs});
    out.section("section9");
    out.field("order", degree);
    out.series("vertex side", r.vertex_side);
    out.series("operator side", r.operator_side);
    out.series("sum Tr B_{n,0} u^n", r.trace_bn0);
    out.field("series identity", r.identity_pass);
    out.field("nonnegative integral extraction", r.extraction_pass);
    return out.verdict(r.pass());
}

int cmd_enumerate(Report& out, const Globals& g, const std::string& what, const std::string& path, int length, bool boundary) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "--length must be positive");
    if (boundary && what != "galleries") fail(ErrorKind::InvalidArgument, "--boundary-check applies to galleries only");
    const TypedComplex cx = load_complex(path);
    require_valid(cx);
    const OracleOptions opts{g.node_budget, g.jobs};
    const bool geo = what == "geodesics";
    const std::uint64_t count = geo ? count_type1_geodesics(cx, length, opts) : count_galleries(cx, length, opts);
    const BigInt trace = (geo ? edge_operator(cx) : chamber_operator(cx)).trace_powers(static_cast<std::size_t>(length)).back();
    out.section(what);
    out.field("length", length);
    out.field("count", static_cast<unsigned long long>(count));
    out.field(geo ? "Tr L_E^n" : "Tr L_B^n", trace.get_str());
    bool pass = trace == BigInt(std::to_string(count));
    out.field("count equals trace", pass);
    if (boundary) {
        const BoundaryReport br = check_gallery_boundaries(cx, length, opts);
        out.section("boundary");
        out.field("galleries", br.galleries);
        out.field("cycles", br.cycles);
        if (!br.detail.empty()) out.field("detail", br.detail);
        out.field("pass", br.pass);
        pass = pass && br.pass;
    }
    return out.verdict(pass);
}

int cmd_building_ball(Report& out, int q, int radius, bool adjacency) {
    const BuildingModel model(q);
    const Ball ball = build_ball(model, radius);
    out.section("ball");
    out.field("q", q);
    out.field("radius", radius);
    out.field("vertices", ball.vertices.size());
    const auto sizes = ball.sphere_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i) out.field("sphere " + std::to_string(i), sizes[i]);
    bool pass = true;
    if (radius >= 1) {
        const LinkCheck lc = base_link_check(model, ball);
        out.field("base link is a projective plane", lc.pass);
        if (!lc.detail.empty()) out.field("link detail", lc.detail);
        pass = lc.pass;
    }
    if (adjacency) {
        std::vector<SparseOperator::Triplet> t;
        for (std::size_t i = 0; i < ball.nbr[0].size(); ++i)
            for (int j : ball.nbr[0][i]) t.push_back({static_cast<int>(i), j, 1});
        const SparseOperator a1(IndexSpace::Vertices, IndexSpace::Vertices, ball.vertices.size(), ball.vertices.size(), std::move(t));
        out.section("type-1 adjacency");
        std::istringstream lines(serialize_sparse(a1));
        std::string line;
        while (std::getline(lines, line)) out.field("triplet", line);
    }
    return out.verdict(pass);
}

int cmd_building_relpos(Report& out, int q, const std::string& from, const std::string& to) {
    const BuildingModel model(q);
    const Mat3 g1 = from.empty() ? BuildingModel::identity() : model.parse_matrix(read_file(from));
    const Mat3 g2 = model.parse_matrix(read_file(to));
    const RelativePosition p = model.relative_position(g1, g2);
    out.section("relpos");
    out.field("from", model.format_vertex(model.canonicalize(g1)));
    out.field("to", model.format_vertex(model.canonicalize(g2)));
    out.field("n", p.n);
    out.field("m", p.m);
    out.field("algebraic length", p.algebraic_length());
    out.field("geometric length", p.geometric_length());
    return kPass;
}

int cmd_building_lcan(Report& out, int q, const std::string& path) {
    const BuildingModel model(q);
    const Mat3 m = model.parse_matrix(read_file(path));
    out.section("lcan");
    out.field("canonical algebraic length", model.canonical_algebraic_length(m).get_str());
    return kPass;
}

int cmd_building_tamagawa(Report& out, int q, int order, int radius) {
    const TamagawaReport r = verify_tamagawa(q, order, radius);
    out.section("tamagawa");
    out.field("q", q);
    out.field("order", order);
    out.field("radius", radius);
    out.field("vertices checked", r.vertices_checked);
    out.poly("value at base", r.base_value);
    if (!r.detail.empty()) out.field("detail", r.detail);
    return out.verdict(r.pass);
}

int cmd_building_geodesic(Report& out, int q, int length, int radius) {
    const GeodesicReport r = verify_geodesic_criterion(q, length, radius);
    out.section("geodesic");
    out.field("q", q);
    out.field("length", length);
    out.field("radius", radius);
    out.field("admissible paths", r.paths);
    out.field("distinct endpoints", r.targets);
    out.field("vertices at (n,0)", r.expected);
    if (!r.detail.empty()) out.field("detail", r.detail);
    return out.verdict(r.pass);
}

int cmd_satake(Report& out, int q, int degree) {
    if (degree < 1) fail(ErrorKind::InvalidArgument, "--degree must be positive");
    if (!FiniteField::is_supported(q)) fail(ErrorKind::UnsupportedOrder, "q = " + std::to_string(q) + " is not a supported prime power");
    const RecursionCheck rc = verify_recursion_42(q, degree);
    const SatakeCheck sc = verify_sigma3_identity(degree);
    const bool vf = verify_vertex_factorization(q);
    out.section("satake");
    out.field("q", q);
    out.field("degree", degree);
    out.field("psi(A1)", satake_A1(q).to_string());
    out.field("psi(A2)", satake_A2(q).to_string());
    for (std::size_t k = 0; k < rc.lhs.size(); ++k) out.field("lhs u^" + std::to_string(k), rc.lhs[k].to_string());
    out.field("recursion (log-derivative form)", rc.pass);
    out.field("closed form with +u^3 term also matches", rc.plus_sign_matches);
    out.field("sigma_3 identity", sc.pass);
    out.field("vertex factorization", vf);
    out.field("symmetric", rc.symmetric && sc.symmetric);
    return out.verdict(rc.pass && sc.pass && vf && rc.symmetric && sc.symmetric);
}

int cmd_tp_search(Report& out, const Globals& g, int q, std::uint64_t seed, std::size_t limit, std::uint64_t budget, const std::string& prefix) {
    const ProjectivePlane plane = build_plane(q);
    SearchOptions opts;
    opts.limit = limit;
    opts.seed = seed;
    opts.jobs = g.jobs;
    opts.node_budget = budget;
    const auto found = search_triangle_presentations(plane, opts);
    out.section("search");
    out.field("q", q);
    out.field("seed", static_cast<unsigned long long>(seed));
    out.field("found", found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        const TypedComplex cx = complex_from_presentation(plane, found[i]);
        out.section("presentation " + std::to_string(i));
        out.field("triples", found[i].triples.size());
        out.field("valid complex", validate(cx).ok());
        out.field("euler characteristic", euler_characteristic(cx));
        if (!prefix.empty()) {
            const std::string base = prefix + "_" + std::to_string(i);
            write_file(base + ".tp", serialize_presentation(found[i]));
            write_file(base + ".cx3", serialize_complex(cx));
            out.field("written", base + ".tp " + base + ".cx3");
        } else {
            std::istringstream lines(serialize_presentation(found[i]));
            std::string line;
            while (std::getline(lines, line)) out.field("line", line);
        }
    }
    return out.verdict(!found.empty());
}

int cmd_tp_build(Report& out, const std::string& path, const std::string& dest) {
    const TrianglePresentation tp = parse_presentation(read_file(path));
    const ProjectivePlane plane = build_plane(tp.q);
    check_presentation(plane, tp);
    const TypedComplex cx = complex_from_presentation(plane, tp);
    const ValidationReport rep = validate(cx);
    if (dest.empty()) {
        std::cout << serialize_complex(cx);
        return rep.ok() ? kPass : kCheckFailed;
    }
    write_file(dest, serialize_complex(cx));
    out.section("build");
    out.field("q", tp.q);
    out.field("chambers", cx.chamber_count());
    out.field("written", dest);
    if (const Check* f = rep.first_failure()) out.field("first failing invariant", f->name);
    return out.verdict(rep.ok());
}

int cmd_graph_zeta(Report& out, const Globals& g, const std::string& path, int walks) {
    const Graph gr = parse_graph(read_file(path));
    const IharaReport r = ihara_zeta(gr, DetOptions{g.jobs});
    out.section("ihara");
    out.field("vertices", gr.vertex_count);
    out.field("edges", gr.edges.size());
    out.field("chi", r.chi);
    out.rational("hashimoto", r.hashimoto);
    out.rational("bass", r.bass);
    out.field("forms agree", r.agree);
    bool pass = r.agree;
    if (walks > 0) {
        const auto tr = edge_adjacency(gr).trace_powers(static_cast<std::size_t>(walks));
        out.section("walks");
        for (int n = 1; n <= walks; ++n) {
            const std::uint64_t c = count_Nn(gr, n, g.node_budget);
            const bool ok = tr[static_cast<std::size_t>(n)] == BigInt(std::to_string(c));
            out.field("N_" + std::to_string(n), std::to_string(c) + (ok ? " = " : " != ") + "Tr A_e^" + std::to_string(n));
            pass = pass && ok;
        }
    }
    return out.verdict(pass);
}

int cmd_graph_check(Report& out, const std::string& path, double tol) {
    const GraphRamanujanReport r = ramanujan_graph_check(parse_graph(read_file(path)), tol);
    out.section("graph ramanujan");
    out.field("q", r.q);
    out.field("bound 2 sqrt q (approx)", approx(r.bound));
    std::string ev;
    for (double x : r.eigenvalues) ev += (ev.empty() ? "" : " ") + approx(x);
    out.field("eigenvalues (approx)", ev);
    out.field("verdict", r.ramanujan ? "RAMANUJAN" : "NOT RAMANUJAN");
    out.field("nontrivial poles on |u| = q^-1/2", r.poles_on_circle);
    out.field("spectral and pole criteria agree", r.ramanujan == r.poles_on_circle);
    return out.verdict(r.ramanujan && r.poles_on_circle);
}

int cmd_graph_generate(const std::string& kind, int n, int degree, int chords, std::uint64_t seed) {
    Graph g;
    if (kind == "cycle") g = cycle_graph(n);
    else if (kind == "complete") g = complete_graph(n);
    else if (kind == "petersen") g = petersen_graph();
    else if (kind == "k4pair") g = joined_k4_pair();
    else if (kind == "necklace") g = necklace_graph(n);
    else if (kind == "regular") g = random_regular_graph(n, degree, seed);
    else g = random_irregular_graph(n, chords, seed);
    std::cout << serialize_graph(g);
    return kPass;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact zeta functions and operator identities for finite quotients of the A2 building"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "text or records")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--node-budget", g.node_budget, "DFS node budget for enumerations");

    std::string cx_path, out_dir, which = "full", what, dest, from, to, matrix_path, prefix, gkind;
    double tol = 1e-6;
    int length = 0, degree = 12, q = 2, radius = -1, order = 4, walks = 8, n = 10, gdegree = 3, chords = 4;
    bool boundary = false, adjacency = false;
    std::uint64_t seed = 0, budget = 0;
    std::size_t limit = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check every complex invariant");
    validate_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);

    auto* operators_cmd = app.add_subcommand("operators", "write A1, A2, L_E, L_B as sparse triplets");
    operators_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    operators_cmd->add_option("--out", out_dir)->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "zeta functions as reduced rational functions");
    zeta_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    zeta_cmd->add_option("--which", which)->check(CLI::IsMember({"vertex", "edge", "gallery", "minus", "full"}));

    auto* check_cmd = app.add_subcommand("check", "identity checks");
    check_cmd->require_subcommand(1);
    auto* identity_cmd = check_cmd->add_subcommand("identity", "main determinant identity");
    identity_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    auto* ramanujan_cmd = check_cmd->add_subcommand("ramanujan", "root moduli and Ramanujan verdict");
    ramanujan_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    ramanujan_cmd->add_option("--tol", tol);
    auto* section9_cmd = check_cmd->add_subcommand("section9", "series form of the identity with Hecke traces");
    section9_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    section9_cmd->add_option("--degree", degree);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "brute-force counts against traces");
    enumerate_cmd->add_option("what", what)->required()->check(CLI::IsMember({"geodesics", "galleries"}));
    enumerate_cmd->add_option("complex", cx_path)->required()->check(CLI::ExistingFile);
    enumerate_cmd->add_option("--length", length)->required();
    enumerate_cmd->add_flag("--boundary-check", boundary);

    auto* building_cmd = app.add_subcommand("building", "local building model");
    building_cmd->require_subcommand(1);
    auto* ball_cmd = building_cmd->add_subcommand("ball", "sphere sizes around the base vertex");
    auto* relpos_cmd = building_cmd->add_subcommand("relpos", "relative position of two lattice classes");
    auto* lcan_cmd = building_cmd->add_subcommand("lcan", "canonical algebraic length of a matrix");
    auto* tamagawa_cmd = building_cmd->add_subcommand("tamagawa", "Hecke recursion on a ball");
    auto* geodesic_cmd = building_cmd->add_subcommand("geodesic", "non-chamber paths against positions (n,0)");
    for (auto* c : {ball_cmd, relpos_cmd, lcan_cmd, tamagawa_cmd, geodesic_cmd}) c->add_option("--q", q)->required();
    ball_cmd->add_option("--radius", radius)->required();
    ball_cmd->add_flag("--adjacency", adjacency);
    relpos_cmd->add_option("--from", from, "matrix file (default identity)")->check(CLI::ExistingFile);
    relpos_cmd->add_option("--to", to, "matrix file")->required()->check(CLI::ExistingFile);
    lcan_cmd->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
    tamagawa_cmd->add_option("--order", order);
    tamagawa_cmd->add_option("--radius", radius, "default order+1");
    geodesic_cmd->add_option("--length", length)->required();
    geodesic_cmd->add_option("--radius", radius, "default length+1");

    auto* satake_cmd = app.add_subcommand("satake", "symbolic Satake transform checks");
    satake_cmd->require_subcommand(1);
    auto* satake_verify = satake_cmd->add_subcommand("verify", "recursion, sigma_3 identity and vertex factorization");
    satake_verify->add_option("--q", q)->required();
    satake_verify->add_option("--degree", degree)->required();

    auto* tp_cmd = app.add_subcommand("tp", "triangle presentations");
    tp_cmd->require_subcommand(1);
    auto* tp_search = tp_cmd->add_subcommand("search", "backtracking search");
    tp_search->add_option("--q", q)->required();
    tp_search->add_option("--seed", seed);
    tp_search->add_option("--limit", limit);
    tp_search->add_option("--budget", budget, "search node budget (0 = unbounded)");
    tp_search->add_option("--out", prefix, "write <prefix>_<i>.tp and <prefix>_<i>.cx3");
    auto* tp_build = tp_cmd->add_subcommand("build", "three-vertex complex from a presentation");
    tp_build->add_option("presentation", cx_path)->required()->check(CLI::ExistingFile);
    tp_build->add_option("--out", dest, "complex file (stdout if omitted)");

    auto* graph_cmd = app.add_subcommand("graph", "graph baseline");
    graph_cmd->require_subcommand(1);
    auto* graph_zeta = graph_cmd->add_subcommand("zeta", "Ihara zeta two ways");
    graph_zeta->add_option("graph", cx_path)->required()->check(CLI::ExistingFile);
    graph_zeta->add_option("--walks", walks, "compare N_n with Tr A_e^n for n up to this");
    auto* graph_check = graph_cmd->add_subcommand("check", "Ramanujan graph check");
    graph_check->add_option("graph", cx_path)->required()->check(CLI::ExistingFile);
    graph_check->add_option("--tol", tol);
    auto* graph_gen = graph_cmd->add_subcommand("generate", "write a test graph");
    graph_gen->add_option("kind", gkind)->required()->check(CLI::IsMember({"cycle", "complete", "petersen", "k4pair", "necklace", "regular", "irregular"}));
    graph_gen->add_option("--n", n);
    graph_gen->add_option("--degree", gdegree);
    graph_gen->add_option("--chords", chords);
    graph_gen->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    Report out(g.format == "records");
    if (*validate_cmd) return cmd_validate(out, cx_path);
    if (*operators_cmd) return cmd_operators(out, cx_path, out_dir);
    if (*zeta_cmd) return cmd_zeta(out, g, cx_path, which);
    if (*identity_cmd) return cmd_check_identity(out, g, cx_path);
    if (*ramanujan_cmd) return cmd_check_ramanujan(out, g, cx_path, tol);
    if (*section9_cmd) return cmd_check_section9(out, g, cx_path, degree);
    if (*enumerate_cmd) return cmd_enumerate(out, g, what, cx_path, length, boundary);
    if (*ball_cmd) return cmd_building_ball(out, q, radius, adjacency);
    if (*relpos_cmd) return cmd_building_relpos(out, q, from, to);
    if (*lcan_cmd) return cmd_building_lcan(out, q, matrix_path);
    if (*tamagawa_cmd) return cmd_building_tamagawa(out, q, order, radius < 0 ? order + 1 : radius);
    if (*geodesic_cmd) return cmd_building_geodesic(out, q, length, radius < 0 ? length + 1 : radius);
    if (*satake_verify) return cmd_satake(out, q, degree);
    if (*tp_search) return cmd_tp_search(out, g, q, seed, limit, budget, prefix);
    if (*tp_build) return cmd_tp_build(out, cx_path, dest);
    if (*graph_zeta) return cmd_graph_zeta(out, g, cx_path, walks);
    if (*graph_check) return cmd_graph_check(out, cx_path, tol);
    if (*graph_gen) return cmd_graph_generate(gkind, n, gdegree, chords, seed);
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const a2zeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency check failed: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
