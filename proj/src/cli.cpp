#include "nsurf/cli.hpp"

#include "nsurf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace nsurf::cli {

namespace {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string triangulation;
    std::string vector_text;
    std::string vector_file;
    std::int64_t max_coord = 1;
    bool fundamental = false;
    std::string fundamental_mode = "all";
    bool include_zero = false;
    unsigned jobs = 1;
    bool human = false;
    double work_budget = 1e10;
    bool count_only = false;
    std::size_t vertex = 0;
};

EnumerationConfig config_of(const Options& o)
{
    EnumerationConfig cfg;
    cfg.max_coordinate = o.max_coord;
    cfg.fundamental_only = o.fundamental;
    cfg.fundamental_mode = o.fundamental_mode == "admissible" ? FundamentalMode::AdmissibleSummands : FundamentalMode::AllSolutions;
    cfg.include_zero = o.include_zero;
    cfg.jobs = o.jobs;
    cfg.work_budget = o.work_budget;
    return cfg;
}

NormalVector read_vector(const Options& o, const Triangulation& tri)
{
    std::string text = o.vector_text;
    if (!o.vector_file.empty()) {
        std::ifstream in(o.vector_file);
        if (!in)
            throw DataError("cannot read " + o.vector_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto v = parse_normal_vector(text);
    if (v.size() != kDiskTypes * tri.size())
        throw DataError("normal vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(kDiskTypes * tri.size()));
    return v;
}

void print(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    const auto n = tri.size();
    const auto b = tri.boundary_face_count();
    const std::string msg = "valid, " + std::to_string(n) + (n == 1 ? " tetrahedron, " : " tetrahedra, ") + std::to_string(b) +
        (b == 1 ? " boundary face" : " boundary faces");
    if (o.human) {
        out << msg << "\n";
    } else {
        nlohmann::ordered_json j;
        j["schema"] = "nsurf.validate/" + std::to_string(kReportSchemaVersion);
        j["valid"] = true;
        j["message"] = msg;
        j["tetrahedra"] = n;
        j["boundary_faces"] = b;
        j["vertices"] = skel.vertex_count();
        j["edges"] = skel.edge_count();
        j["faces"] = skel.face_count();
        print(out, j);
    }
    return kExitOk;
}

int cmd_skeleton(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    const auto j = to_json(tri, skel);
    if (!o.human) {
        print(out, j);
        return kExitOk;
    }
    out << "vertices " << skel.vertex_count() << ", edges " << skel.edge_count() << ", faces " << skel.face_count() << ", N " << max_vertex_degree(skel)
        << "\n";
    for (std::size_t v = 0; v < skel.vertex_count(); ++v)
        out << "  vertex " << v << ": " << skel.corner_count(v) << " corners" << (skel.vertex_boundary[v] ? ", boundary" : "") << "\n";
    for (std::size_t e = 0; e < skel.edge_count(); ++e)
        out << "  edge " << e << ": degree " << skel.edge_degree(e) << (skel.edge_boundary[e] ? ", boundary" : "")
            << (skel.edge_self_reversed[e] ? ", self-reversed" : "") << "\n";
    return kExitOk;
}

int cmd_equations(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto m = build_matching_system(tri, compute_skeleton(tri));
    if (!o.human) {
        print(out, to_json(m));
        return kExitOk;
    }
    for (const auto& r : m.rows) {
        out << "face " << r.face_class << " corner " << r.arc_corner << ":";
        if (r.trivial())
            out << " 0";
        for (const auto& [col, coef] : r.terms) {
            const auto d = DiskType::from_coordinate(col);
            out << ' ' << (coef > 0 ? "+" : "") << coef << (d.is_triangle() ? "*t" : "*q") << d.tet << "." << d.index;
        }
        out << " = 0\n";
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto m = build_matching_system(tri, compute_skeleton(tri));
    const auto vs = enumerate_admissible(m, config_of(o));
    if (o.count_only) {
        out << vs.size() << "\n";
        return kExitOk;
    }
    for (const auto& v : vs)
        out << to_string(v) << "\n";
    return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    const auto v = read_vector(o, tri);
    SurfaceComplex c;
    try {
        c = build_surface(tri, skel, v);
    } catch (const BuildError& e) {
        throw DataError(std::string(to_string(e.kind())) + ": " + e.what());
    }
    if (!o.human) {
        print(out, to_json(c));
        return kExitOk;
    }
    out << c.disks.size() << " disks, " << c.arcs.size() << " arcs, " << c.points.size() << " points, chi " << c.cells.euler_characteristic() << "\n";
    return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    const auto m = build_matching_system(tri, skel);
    const auto v = read_vector(o, tri);
    if (!is_admissible(v))
        throw DataError("vector is not admissible: two quad types in one tetrahedron");
    if (!satisfies_matching(v, m))
        throw DataError("vector violates the matching equations");
    const auto r = analyze_surface(tri, skel, m, v);
    if (o.human)
        out << human_readable(r);
    else
        print(out, to_json(r));
    return r.built ? kExitOk : kExitData;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    const auto s = verify_batch(tri, skel, config_of(o));
    if (o.human)
        out << human_readable(s);
    else
        print(out, to_json(s));
    return s.hard_failures() == 0 ? kExitOk : kExitData;
}

int cmd_vertex_link(const Options& o, std::ostream& out)
{
    const auto tri = load_triangulation(o.triangulation);
    const auto skel = compute_skeleton(tri);
    if (o.vertex >= skel.vertex_count())
        throw DataError("no vertex class " + std::to_string(o.vertex) + " (triangulation has " + std::to_string(skel.vertex_count()) + ")");
    const auto v = vertex_link_vector(skel, o.vertex);
    const auto r = analyze_surface(tri, skel, build_matching_system(tri, skel), v);
    if (o.human) {
        out << human_readable(r);
        return kExitOk;
    }
    auto j = to_json(r);
    j["vertex"] = o.vertex;
    print(out, j);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Normal surface enumeration and decomposition checks", "nsurf"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_tri = [&](CLI::App* sub) { sub->add_option("triangulation", o.triangulation, "gluing table file")->required(); };
    auto add_human = [&](CLI::App* sub) { sub->add_flag("--human", o.human, "plain text instead of JSON"); };
    auto add_vector = [&](CLI::App* sub) {
        auto* inline_opt = sub->add_option("--vector", o.vector_text, "normal coordinates, 7 per tetrahedron");
        auto* file_opt = sub->add_option("--vector-file", o.vector_file, "file holding the normal coordinates");
        inline_opt->excludes(file_opt);
        sub->callback([&o, sub] {
            if (o.vector_text.empty() && o.vector_file.empty())
                throw CLI::RequiredError(sub->get_name() + ": --vector or --vector-file");
        });
    };
    auto add_enum = [&](CLI::App* sub) {
        sub->add_option("--max-coord", o.max_coord, "upper bound on every coordinate")->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));
        sub->add_flag("--fundamental", o.fundamental, "keep only fundamental solutions");
        sub->add_option("--fundamental-mode", o.fundamental_mode, "summands allowed when testing fundamentality")
            ->check(CLI::IsMember({"all", "admissible"}));
        sub->add_flag("--include-zero", o.include_zero, "include the zero vector");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--work-budget", o.work_budget, "refuse searches larger than this")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "parse a triangulation and check its invariants");
    add_tri(validate);
    add_human(validate);
    auto* skeleton = app.add_subcommand("skeleton", "vertex, edge and face classes");
    add_tri(skeleton);
    add_human(skeleton);
    auto* equations = app.add_subcommand("equations", "matching equations");
    add_tri(equations);
    add_human(equations);
    auto* enumerate = app.add_subcommand("enumerate", "admissible solutions, one per line");
    add_tri(enumerate);
    add_enum(enumerate);
    enumerate->add_flag("--count-only", o.count_only, "print only the number of solutions");
    auto* build = app.add_subcommand("build", "cell complex of a normal vector");
    add_tri(build);
    add_vector(build);
    add_human(build);
    auto* analyze = app.add_subcommand("analyze", "invariants, decomposition and checks for one vector");
    add_tri(analyze);
    add_vector(analyze);
    add_human(analyze);
    auto* verify = app.add_subcommand("verify", "check every enumerated surface");
    add_tri(verify);
    add_enum(verify);
    add_human(verify);
    auto* link = app.add_subcommand("vertex-link", "normal coordinates of a vertex link");
    add_tri(link);
    link->add_option("--vertex", o.vertex, "vertex class")->required();
    add_human(link);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o, out);
        if (skeleton->parsed())
            return cmd_skeleton(o, out);
        if (equations->parsed())
            return cmd_equations(o, out);
        if (enumerate->parsed())
            return cmd_enumerate(o, out);
        if (build->parsed())
            return cmd_build(o, out);
        if (analyze->parsed())
            return cmd_analyze(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        return cmd_vertex_link(o, out);
    } catch (const TriangulationError& e) {
        err << "error: " << o.triangulation << ": " << e.what() << "\n";
    } catch (const CoordinateError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const WorkBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitData;
}

} // namespace nsurf::cli
