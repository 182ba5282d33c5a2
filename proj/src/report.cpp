#include "nsurf/report.hpp"

#include <sstream>

namespace nsurf {

using nlohmann::ordered_json;

namespace {

std::string schema(const char* kind) { return std::string("nsurf.") + kind + "/" + std::to_string(kReportSchemaVersion); }

const char* kind_name(DiskType::Kind k) { return k == DiskType::Kind::Triangle ? "triangle" : "quad"; }

} // namespace

std::string surface_name(const ComponentTopology& t)
{
    const auto b = t.boundary_circles;
    if (t.orientable) {
        if (t.genus == 0) {
            switch (b) {
            case 0:
                return "sphere";
            case 1:
                return "disk";
            case 2:
                return "annulus";
            default:
                return "sphere with " + std::to_string(b) + " holes";
            }
        }
        if (t.genus == 1 && b == 0)
            return "torus";
        std::string out = "orientable genus " + std::to_string(t.genus);
        if (b > 0)
            out += " with " + std::to_string(b) + " holes";
        return out;
    }
    if (b == 0 && t.genus == 1)
        return "projective plane";
    if (b == 0 && t.genus == 2)
        return "Klein bottle";
    if (b == 1 && t.genus == 1)
        return "Mobius band";
    std::string out = "non-orientable, " + std::to_string(t.genus) + " crosscaps";
    if (b > 0)
        out += ", " + std::to_string(b) + " holes";
    return out;
}

ordered_json to_json(const Triangulation& tri, const Skeleton& skel)
{
    ordered_json j;
    j["schema"] = schema("skeleton");
    j["tetrahedra"] = tri.size();
    j["closed"] = tri.is_closed();
    j["boundary_faces"] = tri.boundary_face_count();
    j["N"] = max_vertex_degree(skel);
    j["N_convention"] = kDegreeConvention;

    auto& verts = j["vertices"] = ordered_json::array();
    for (std::size_t v = 0; v < skel.vertex_count(); ++v) {
        ordered_json corners = ordered_json::array();
        for (const auto& m : skel.vertex_members[v])
            corners.push_back({m.tet, m.face});
        // links are reported, not rejected: a closed 3-manifold has sphere links,
        // boundary vertices have disk links
        std::string link;
        bool link_ok = false;
        try {
            const auto inv = invariants(build_surface(tri, skel, vertex_link_vector(skel, v)), skel);
            link = inv.component_count() == 1 ? surface_name(inv.components[0].topology) : "disconnected";
            link_ok = link == (skel.vertex_boundary[v] ? "disk" : "sphere");
        } catch (const BuildError& e) {
            link = std::string("not built: ") + e.what();
        }
        verts.push_back({{"id", v},
                         {"corners", skel.corner_count(v)},
                         {"boundary", static_cast<bool>(skel.vertex_boundary[v])},
                         {"link", link},
                         {"link_manifold", link_ok},
                         {"members", corners}});
    }
    auto& edges = j["edges"] = ordered_json::array();
    for (std::size_t e = 0; e < skel.edge_count(); ++e) {
        ordered_json slots = ordered_json::array();
        for (auto s : skel.edge_members[e])
            slots.push_back({s / 6, kEdgeCorners[s % 6][0], kEdgeCorners[s % 6][1], static_cast<bool>(skel.edge_flipped[s])});
        edges.push_back({{"id", e},
                         {"degree", skel.edge_degree(e)},
                         {"boundary", static_cast<bool>(skel.edge_boundary[e])},
                         {"self_reversed", static_cast<bool>(skel.edge_self_reversed[e])},
                         {"slots", slots}});
    }
    auto& faces = j["faces"] = ordered_json::array();
    for (std::size_t f = 0; f < skel.face_count(); ++f) {
        ordered_json sides = ordered_json::array();
        for (const auto& m : skel.face_members[f])
            sides.push_back({m.tet, m.face});
        faces.push_back({{"id", f}, {"interior", skel.face_interior(f)}, {"sides", sides}});
    }
    j["euler_characteristic"] = static_cast<std::int64_t>(skel.vertex_count()) - static_cast<std::int64_t>(skel.edge_count()) +
        static_cast<std::int64_t>(skel.face_count()) - static_cast<std::int64_t>(tri.size());
    return j;
}

ordered_json to_json(const MatchingSystem& m)
{
    ordered_json j;
    j["schema"] = schema("equations");
    j["tetrahedra"] = m.tet_count;
    j["variables"] = kDiskTypes * m.tet_count;
    j["rows"] = m.rows.size();
    j["trivial_rows"] = m.trivial_rows();
    auto& rows = j["equations"] = ordered_json::array();
    for (const auto& r : m.rows) {
        ordered_json terms = ordered_json::array();
        for (const auto& [col, coef] : r.terms)
            terms.push_back({col, coef});
        rows.push_back({{"face", r.face_class}, {"arc_corner", r.arc_corner}, {"terms", terms}});
    }
    return j;
}

ordered_json to_json(const SurfaceComplex& c)
{
    ordered_json j;
    j["schema"] = schema("complex");
    j["disks"] = ordered_json::array();
    for (std::size_t d = 0; d < c.disks.size(); ++d) {
        const auto& disk = c.disks[d];
        ordered_json boundary = ordered_json::array();
        const auto& sides = c.cells.faces[d].sides;
        for (std::size_t k = 0; k < sides.size(); ++k) {
            boundary.push_back({{"point", c.cells.corner_vertex(d, k)}, {"arc", sides[k].edge}});
        }
        j["disks"].push_back({{"tet", disk.type.tet},
                              {"kind", kind_name(disk.type.kind)},
                              {"index", disk.type.index},
                              {"copy", disk.copy},
                              {"boundary", boundary}});
    }
    j["arcs"] = ordered_json::array();
    for (std::size_t a = 0; a < c.arcs.size(); ++a) {
        const auto& arc = c.arcs[a];
        const auto& e = c.cells.edges[a];
        j["arcs"].push_back({{"face", arc.face_class},
                             {"corner", arc.linked_corner},
                             {"index", arc.index},
                             {"boundary", arc.on_boundary},
                             {"ends", {e.ends[0], e.ends[1]}}});
    }
    j["points"] = ordered_json::array();
    for (const auto& p : c.points)
        j["points"].push_back({{"edge", p.edge_class}, {"position", p.position}});
    j["euler_characteristic"] = c.cells.euler_characteristic();
    return j;
}

ordered_json to_json(const TheoremReport& r)
{
    ordered_json j;
    j["schema"] = schema("surface");
    j["vector"] = to_string(r.vector);
    j["hypotheses"] = {{"closed_manifold", r.closed_manifold}, {"closed_surface", r.closed_surface}, {"nonempty", r.nonempty}};
    j["built"] = r.built;
    if (!r.built) {
        j["build_error"] = {{"kind", r.build_error_kind ? to_string(*r.build_error_kind) : "unknown"}, {"message", r.build_error}};
        return j;
    }
    const auto& inv = *r.invariants;
    j["counts"] = {{"disks", inv.disks}, {"triangles", inv.triangles}, {"quads", inv.quads}, {"arcs", inv.arcs}, {"points", inv.corners}};
    j["chi"] = inv.chi;
    j["N"] = r.max_degree;
    j["N_convention"] = kDegreeConvention;
    auto& comps = j["components"] = ordered_json::array();
    for (const auto& c : inv.components) {
        const auto& t = c.topology;
        ordered_json cj{{"surface", surface_name(t)},
                        {"chi", t.chi},
                        {"orientable", t.orientable},
                        {t.orientable ? "genus" : "crosscaps", t.genus},
                        {"boundary_circles", t.boundary_circles},
                        {"triangles", c.triangles},
                        {"quads", c.quads},
                        {"vertex_linking", c.vertex_linking}};
        cj["linked_vertex"] = c.linked_vertex ? ordered_json(*c.linked_vertex) : ordered_json(nullptr);
        comps.push_back(std::move(cj));
    }
    const auto& t1 = r.theorem1;
    j["theorem1"] = {{"vacuous", t1.vacuous}, {"holds", t1.holds}, {"margin", t1.margin}, {"closed_surface", t1.closed_surface}};
    if (t1.genus_applicable)
        j["genus_bound"] = {{"holds", t1.genus_holds}, {"margin", t1.genus_margin}};
    else
        j["genus_bound"] = nullptr;
    const auto& t2 = r.theorem2;
    if (t2.applicable)
        j["theorem2"] = {{"applicable", true}, {"holds", t2.holds}, {"margin", t2.margin}};
    else
        j["theorem2"] = {{"applicable", false}};

    if (r.decomposition) {
        const auto& d = *r.decomposition;
        ordered_json scc = ordered_json::array();
        for (const auto& c : d.components)
            scc.push_back({{"triangles", c.disks.size()}, {"linked_vertex", c.linked_vertex}});
        j["decomposition"] = {{"omega", d.omega.size()},
                              {"a_prime_components", d.a_prime_components},
                              {"a_prime_boundary", d.a_prime_boundary},
                              {"b_prime_boundary", d.b_prime_boundary},
                              {"chi_a_prime", d.chi_a_prime},
                              {"chi_b_prime", d.chi_b_prime},
                              {"chi_b_prime_direct", r.chi_b_prime_direct},
                              {"weight_b", d.weight.weight_b},
                              {"weight_boundary_b", d.weight.weight_boundary_b},
                              {"triangle_components", scc}};
    } else {
        j["decomposition"] = nullptr;
    }
    if (r.gamma) {
        const auto& g = *r.gamma;
        std::size_t loops = 0;
        std::size_t qq = 0;
        for (const auto& e : g.edges) {
            loops += e.a == e.b;
            qq += e.a < g.q_vertices && e.b < g.q_vertices;
        }
        j["gamma"] = {{"q_vertices", g.q_vertices}, {"s_vertices", g.s_vertices}, {"edges", g.edges.size()}, {"qq_edges", qq}, {"loops", loops}};
    } else {
        j["gamma"] = nullptr;
    }
    auto& checks = j["checks"] = ordered_json::object();
    for (const auto& c : r.checks) {
        ordered_json cj{{"status", to_string(c.status)}};
        if (!c.detail.empty())
            cj["detail"] = c.detail;
        checks[c.name] = std::move(cj);
    }
    return j;
}

ordered_json to_json(const BatchSummary& s)
{
    ordered_json j;
    j["schema"] = schema("verify");
    j["triangulation"] = {{"tetrahedra", s.tet_count}, {"closed", s.closed_manifold}, {"N", s.max_degree}, {"N_convention", kDegreeConvention}};
    j["config"] = {{"max_coord", s.config.max_coordinate},
                   {"fundamental", s.config.fundamental_only},
                   {"fundamental_mode", to_string(s.config.fundamental_mode)},
                   {"include_zero", s.config.include_zero}};
    j["totals"] = {{"surfaces", s.surfaces},
                   {"zero_vectors_skipped", s.zero_vectors},
                   {"built", s.built},
                   {"build_failures", s.build_failures.size()},
                   {"vertex_linking_surfaces", s.vertex_linking_surfaces}};
    j["vacuous"] = s.vacuous();
    auto& checks = j["checks"] = ordered_json::object();
    for (const auto& name : check_names()) {
        const auto& t = s.tallies.at(name);
        checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"caveat", t.caveat}, {"n/a", t.not_applicable}};
    }
    j["min_margins"] = {{"theorem1", s.min_theorem1_margin ? ordered_json(*s.min_theorem1_margin) : ordered_json(nullptr)},
                        {"theorem2", s.min_theorem2_margin ? ordered_json(*s.min_theorem2_margin) : ordered_json(nullptr)}};
    auto list = [](const std::vector<Violation>& vs) {
        ordered_json out = ordered_json::array();
        for (const auto& v : vs)
            out.push_back({{"vector", to_string(v.vector)}, {"checks", v.checks}});
        return out;
    };
    j["violations"] = list(s.violations);
    j["caveats"] = list(s.caveats);
    j["build_failures"] = ordered_json::array();
    for (const auto& [v, msg] : s.build_failures)
        j["build_failures"].push_back({{"vector", to_string(v)}, {"message", msg}});
    j["hard_failures"] = s.hard_failures();
    j["status"] = s.hard_failures() == 0 ? "ok" : "FAILED";
    return j;
}

std::string human_readable(const TheoremReport& r)
{
    std::ostringstream os;
    os << "vector  " << to_string(r.vector) << "\n";
    if (!r.built) {
        os << "build failed (" << (r.build_error_kind ? to_string(*r.build_error_kind) : "unknown") << "): " << r.build_error << "\n";
        return os.str();
    }
    const auto& inv = *r.invariants;
    os << "chi " << inv.chi << "  Q " << inv.quads << "  T " << inv.triangles << "  N " << r.max_degree << "  closed " << (inv.closed ? "yes" : "no")
       << "\n";
    for (std::size_t k = 0; k < inv.components.size(); ++k) {
        const auto& c = inv.components[k];
        os << "  component " << k << ": " << surface_name(c.topology) << ", chi " << c.topology.chi << ", T " << c.triangles << ", Q " << c.quads;
        if (c.vertex_linking)
            os << ", links vertex " << *c.linked_vertex;
        os << "\n";
    }
    for (const auto& c : r.checks) {
        os << "  " << c.name;
        for (std::size_t pad = c.name.size(); pad < 22; ++pad)
            os << ' ';
        os << to_string(c.status);
        if (!c.detail.empty() && c.status != CheckStatus::NotApplicable)
            os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

std::string human_readable(const BatchSummary& s)
{
    std::ostringstream os;
    os << s.tet_count << " tetrahedra, " << (s.closed_manifold ? "closed" : "bounded") << ", N " << s.max_degree << " (" << kDegreeConvention
       << ")\n";
    os << "surfaces " << s.surfaces << (s.vacuous() ? " (vacuous)" : "") << ", built " << s.built << ", build failures " << s.build_failures.size()
       << "\n";
    os << "check                  pass   fail  caveat    n/a\n";
    for (const auto& name : check_names()) {
        const auto& t = s.tallies.at(name);
        char line[96];
        std::snprintf(line, sizeof line, "%-20s %6zu %6zu %7zu %6zu\n", name.c_str(), t.pass, t.fail, t.caveat, t.not_applicable);
        os << line;
    }
    if (s.min_theorem1_margin)
        os << "min theorem1 margin " << *s.min_theorem1_margin << "\n";
    if (s.min_theorem2_margin)
        os << "min theorem2 margin " << *s.min_theorem2_margin << "\n";
    for (const auto& v : s.violations) {
        os << "VIOLATION " << to_string(v.vector) << ":";
        for (const auto& c : v.checks)
            os << " " << c;
        os << "\n";
    }
    os << (s.hard_failures() == 0 ? "ok" : "FAILED") << ", " << s.hard_failures() << " violations\n";
    return os.str();
}

} // namespace nsurf
