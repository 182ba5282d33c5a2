#include "nsurf/surface.hpp"

#include <algorithm>
#include <map>

namespace nsurf {

const char* to_string(BuildError::Kind kind)
{
    switch (kind) {
    case BuildError::Kind::NotAdmissible:
        return "not admissible";
    case BuildError::Kind::MatchingViolated:
        return "matching violated";
    case BuildError::Kind::InconsistentStacking:
        return "inconsistent stacking";
    case BuildError::Kind::NonManifoldIdentification:
        return "non-manifold identification";
    }
    return "unknown";
}

namespace {

class Builder {
public:
    Builder(const Triangulation& tri, const Skeleton& skel, const NormalVector& v) : tri_(tri), skel_(skel), v_(v) {}

    SurfaceComplex build()
    {
        out_.tet_count = tri_.size();
        make_points();
        make_arcs();
        make_disks();
        try {
            out_.fans = vertex_fans(out_.cells);
        } catch (const NonManifoldError& e) {
            throw BuildError(BuildError::Kind::InconsistentStacking, e.what());
        }
        for (std::size_t p = 0; p < out_.points.size(); ++p) {
            if (out_.fans[p].closed == skel_.edge_boundary[out_.points[p].edge_class])
                throw BuildError(BuildError::Kind::InconsistentStacking, "fan around crossing point " + std::to_string(p) + " has the wrong shape");
        }
        return std::move(out_);
    }

private:
    std::int64_t slot_points(std::size_t t, int e) const
    {
        const int a = kEdgeCorners[static_cast<std::size_t>(e)][0];
        const int b = kEdgeCorners[static_cast<std::size_t>(e)][1];
        std::int64_t n = v_.triangles(t, a) + v_.triangles(t, b);
        if (const int q = v_.quad_type(t); q != 0 && quad_crosses_edge(q, a, b))
            n += v_.quads(t, q);
        return n;
    }

    void make_points()
    {
        const std::size_t ne = skel_.edge_count();
        class_points_.assign(ne, 0);
        point_offset_.assign(ne, 0);
        for (std::size_t ec = 0; ec < ne; ++ec) {
            const auto& members = skel_.edge_members[ec];
            const std::size_t root = members.front();
            const std::int64_t n = slot_points(root / 6, static_cast<int>(root % 6));
            for (auto slot : members)
                if (slot_points(slot / 6, static_cast<int>(slot % 6)) != n)
                    throw BuildError(BuildError::Kind::InconsistentStacking, "edge class " + std::to_string(ec) + " carries unequal crossing counts");
            if (skel_.edge_self_reversed[ec] && n % 2 == 1)
                throw BuildError(BuildError::Kind::NonManifoldIdentification,
                                 "crossing point at the midpoint of edge class " + std::to_string(ec) + " is folded onto itself");
            class_points_[ec] = n;
            point_offset_[ec] = out_.points.size();
            const std::int64_t distinct = skel_.edge_self_reversed[ec] ? n / 2 : n;
            for (std::int64_t q = 0; q < distinct; ++q)
                out_.points.push_back({ec, q});
        }
        out_.cells.vertex_count = out_.points.size();
    }

    // Crossing point on edge {a, b} of tet t, `pos` steps from corner a.
    std::size_t point_id(std::size_t t, int a, int b, std::int64_t pos) const
    {
        const int e = edge_index(a, b);
        const std::size_t slot = 6 * t + static_cast<std::size_t>(e);
        const std::size_t ec = skel_.edge_class[slot];
        const std::int64_t n = class_points_[ec];
        if (pos < 0 || pos >= n)
            throw BuildError(BuildError::Kind::InconsistentStacking, "crossing position out of range on edge class " + std::to_string(ec));
        std::int64_t q = a == kEdgeCorners[static_cast<std::size_t>(e)][0] ? pos : n - 1 - pos;
        if (skel_.edge_flipped[slot])
            q = n - 1 - q;
        if (skel_.edge_self_reversed[ec])
            q = std::min(q, n - 1 - q);
        return point_offset_[ec] + static_cast<std::size_t>(q);
    }

    std::int64_t arc_count(std::size_t t, int face, int corner) const
    {
        return v_.triangles(t, corner) + v_.quads(t, quad_separating(corner, face));
    }

    void make_arcs()
    {
        const std::size_t nf = skel_.face_count();
        arc_offset_.assign(nf, {});
        for (std::size_t fc = 0; fc < nf; ++fc) {
            const FaceRef lo = skel_.face_members[fc].front();
            const auto& g = tri_.gluing(lo.tet, lo.face);
            const auto fcorners = face_corners(lo.face);
            for (std::size_t k = 0; k < 3; ++k) {
                const int c = fcorners[k];
                const std::int64_t count = arc_count(lo.tet, lo.face, c);
                if (g && arc_count(g->tet, g->face, g->perm[c]) != count)
                    throw BuildError(BuildError::Kind::InconsistentStacking, "face class " + std::to_string(fc) + " has unequal arc counts");
                arc_offset_[fc][k] = out_.arcs.size();
                int d = -1;
                int e = -1;
                for (int x : fcorners)
                    if (x != c)
                        (d < 0 ? d : e) = x;
                for (std::int64_t i = 0; i < count; ++i) {
                    out_.arcs.push_back({fc, c, i, !g.has_value()});
                    CellComplex::Edge edge;
                    edge.ends[0] = point_id(lo.tet, c, d, i);
                    edge.ends[1] = point_id(lo.tet, c, e, i);
                    if (g && (point_id(g->tet, g->perm[c], g->perm[d], i) != edge.ends[0] ||
                              point_id(g->tet, g->perm[c], g->perm[e], i) != edge.ends[1]))
                        throw BuildError(BuildError::Kind::InconsistentStacking, "arc endpoints disagree across face class " + std::to_string(fc));
                    out_.cells.edges.push_back(edge);
                }
            }
        }
    }

    // Side of a disk running along the arc that links `corner` in face `face`
    // of tet t, starting on edge {corner, from}.
    CellComplex::Side arc_side(std::size_t t, int face, int corner, std::int64_t index, int from) const
    {
        const std::size_t fc = skel_.face_of(t, face);
        const FaceRef lo = skel_.face_members[fc].front();
        int c = corner;
        int x = from;
        if (lo != FaceRef{t, face}) {
            const auto& g = *tri_.gluing(t, face);
            c = g.perm[corner];
            x = g.perm[from];
        }
        const auto fcorners = face_corners(lo.face);
        const std::size_t k = static_cast<std::size_t>(std::find(fcorners.begin(), fcorners.end(), c) - fcorners.begin());
        const int d = c == fcorners[0] ? fcorners[1] : fcorners[0];
        return {arc_offset_[fc][k] + static_cast<std::size_t>(index), x == d};
    }

    void add_disk(const DiskType& type, std::int64_t copy, const std::vector<CellComplex::Side>& sides, const std::vector<std::size_t>& expected)
    {
        for (std::size_t k = 0; k < sides.size(); ++k) {
            const auto& s = sides[k];
            if (out_.cells.start_vertex(s) != expected[k] || out_.cells.end_vertex(s) != expected[(k + 1) % sides.size()])
                throw BuildError(BuildError::Kind::InconsistentStacking, "disk boundary does not close up in tet " + std::to_string(type.tet));
        }
        out_.disks.push_back({type, copy});
        out_.cells.faces.push_back({sides});
    }

    void make_disks()
    {
        for (std::size_t t = 0; t < tri_.size(); ++t) {
            for (int a = 0; a < 4; ++a) {
                int others[3];
                int k = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != a)
                        others[k++] = x;
                const int b = others[0], c = others[1], d = others[2];
                for (std::int64_t i = 0; i < v_.triangles(t, a); ++i) {
                    add_disk(DiskType::triangle(t, a), i,
                             {arc_side(t, d, a, i, b), arc_side(t, b, a, i, c), arc_side(t, c, a, i, d)},
                             {point_id(t, a, b, i), point_id(t, a, c, i), point_id(t, a, d, i)});
                }
            }
            const int q = v_.quad_type(t);
            if (q == 0)
                continue;
            const auto sides = quad_sides(q);
            const int x = sides[0], y = sides[1], z = sides[2], w = sides[3];
            const std::int64_t count = v_.quads(t, q);
            for (std::int64_t j = 0; j < count; ++j) {
                const std::int64_t near = j;             // distance from the {x, y} side
                const std::int64_t far = count - 1 - j;  // distance from the {z, w} side
                const auto tx = v_.triangles(t, x), ty = v_.triangles(t, y), tz = v_.triangles(t, z), tw = v_.triangles(t, w);
                add_disk(DiskType::quad(t, q), j,
                         {arc_side(t, y, x, tx + near, z), arc_side(t, z, w, tw + far, x), arc_side(t, x, y, ty + near, w),
                          arc_side(t, w, z, tz + far, y)},
                         {point_id(t, x, z, tx + near), point_id(t, x, w, tx + near), point_id(t, y, w, ty + near), point_id(t, y, z, ty + near)});
            }
        }
    }

    const Triangulation& tri_;
    const Skeleton& skel_;
    const NormalVector& v_;
    SurfaceComplex out_;
    std::vector<std::int64_t> class_points_;
    std::vector<std::size_t> point_offset_;
    std::vector<std::array<std::size_t, 3>> arc_offset_;
};

} // namespace

SurfaceComplex build_surface(const Triangulation& tri, const Skeleton& skel, const MatchingSystem& m, const NormalVector& v)
{
    if (v.size() != kDiskTypes * tri.size())
        throw CoordinateError("normal vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(kDiskTypes * tri.size()));
    if (!is_admissible(v))
        throw BuildError(BuildError::Kind::NotAdmissible, "not admissible: two quad types in one tetrahedron");
    if (!satisfies_matching(v, m))
        throw BuildError(BuildError::Kind::MatchingViolated, "matching violated");
    return Builder(tri, skel, v).build();
}

SurfaceComplex build_surface(const Triangulation& tri, const Skeleton& skel, const NormalVector& v)
{
    return build_surface(tri, skel, build_matching_system(tri, skel), v);
}

NormalVector disk_multiplicities(const SurfaceComplex& c)
{
    NormalVector v(c.tet_count);
    for (const auto& d : c.disks)
        v[d.type.coordinate()] += 1;
    return v;
}

bool SurfaceInvariants::has_vertex_linking_component() const
{
    return std::any_of(components.begin(), components.end(), [](const auto& c) { return c.vertex_linking; });
}

std::vector<std::optional<std::size_t>> detect_vertex_linking(const SurfaceComplex& c, const Skeleton& skel, const ComponentPartition& parts,
                                                              const std::vector<ComponentTopology>& topo)
{
    std::vector<std::map<std::size_t, std::int64_t>> corner_hits(parts.count);
    std::vector<bool> all_triangles(parts.count, true);
    for (std::size_t d = 0; d < c.disks.size(); ++d) {
        const auto k = parts.face_component[d];
        const auto& type = c.disks[d].type;
        if (!type.is_triangle()) {
            all_triangles[k] = false;
            continue;
        }
        corner_hits[k][4 * type.tet + static_cast<std::size_t>(type.index)] += 1;
    }
    std::vector<std::optional<std::size_t>> out(parts.count);
    for (std::size_t k = 0; k < parts.count; ++k) {
        if (!topo[k].closed() || !all_triangles[k] || corner_hits[k].empty())
            continue;
        const std::size_t vertex = skel.corner_class[corner_hits[k].begin()->first];
        bool one_per_corner = corner_hits[k].size() == skel.corner_count(vertex);
        for (const auto& [corner, hits] : corner_hits[k])
            one_per_corner = one_per_corner && hits == 1 && skel.corner_class[corner] == vertex;
        if (one_per_corner)
            out[k] = vertex;
    }
    return out;
}

SurfaceInvariants invariants(const SurfaceComplex& c, const Skeleton& skel)
{
    SurfaceInvariants inv;
    inv.corners = c.cells.vertex_count;
    inv.arcs = c.cells.edges.size();
    inv.disks = c.cells.faces.size();
    inv.chi = c.cells.euler_characteristic();
    inv.closed = std::none_of(c.arcs.begin(), c.arcs.end(), [](const auto& a) { return a.on_boundary; });
    inv.partition = components(c.cells);
    const auto topo = component_topology(c.cells, inv.partition);
    const auto links = detect_vertex_linking(c, skel, inv.partition, topo);
    inv.components.resize(inv.partition.count);
    for (std::size_t k = 0; k < inv.partition.count; ++k) {
        inv.components[k].topology = topo[k];
        inv.components[k].vertex_linking = links[k].has_value();
        inv.components[k].linked_vertex = links[k];
    }
    for (std::size_t d = 0; d < c.disks.size(); ++d) {
        auto& comp = inv.components[inv.partition.face_component[d]];
        if (c.disks[d].type.is_triangle()) {
            ++comp.triangles;
            ++inv.triangles;
        } else {
            ++comp.quads;
            ++inv.quads;
        }
    }
    return inv;
}

} // namespace nsurf
