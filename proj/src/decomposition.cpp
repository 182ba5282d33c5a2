#include "nsurf/decomposition.hpp"

#include "nsurf/union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nsurf {

namespace {

std::vector<FanRun> runs_of(const Fan& fan, const std::function<bool(std::size_t)>& member)
{
    const std::size_t n = fan.corners.size();
    std::vector<bool> in(n);
    for (std::size_t k = 0; k < n; ++k)
        in[k] = member(fan.corners[k].face);
    std::vector<FanRun> runs;
    if (!fan.closed) {
        for (std::size_t k = 0; k < n;) {
            if (!in[k]) {
                ++k;
                continue;
            }
            std::size_t len = 0;
            while (k + len < n && in[k + len])
                ++len;
            runs.push_back({k, len});
            k += len;
        }
        return runs;
    }
    const auto gap = std::find(in.begin(), in.end(), false);
    if (gap == in.end()) {
        if (n > 0)
            runs.push_back({0, n});
        return runs;
    }
    // start scanning just after a non-member so no run wraps past the start
    const std::size_t s = static_cast<std::size_t>(gap - in.begin());
    for (std::size_t step = 1; step <= n;) {
        const std::size_t k = (s + step) % n;
        if (!in[k]) {
            ++step;
            continue;
        }
        std::size_t len = 0;
        while (step + len <= n && in[(s + step + len) % n])
            ++len;
        runs.push_back({k, len});
        step += len;
    }
    std::sort(runs.begin(), runs.end(), [](const FanRun& a, const FanRun& b) { return a.first < b.first; });
    return runs;
}

// Arc ends on either side of a run.
std::pair<EdgeEnd, EdgeEnd> run_bounds(const Fan& fan, const FanRun& r)
{
    const std::size_t n = fan.corners.size();
    const std::size_t after = fan.closed ? (r.first + r.length) % n : r.first + r.length;
    return {fan.links[r.first], fan.links[after]};
}

} // namespace

std::vector<FanRun> triangle_runs(const SurfaceComplex& c, const Fan& fan)
{
    return runs_of(fan, [&](std::size_t d) { return c.disks[d].type.is_triangle(); });
}

std::vector<FanRun> quad_runs(const SurfaceComplex& c, const Fan& fan)
{
    return runs_of(fan, [&](std::size_t d) { return !c.disks[d].type.is_triangle(); });
}

std::vector<std::size_t> singular_points(const SurfaceComplex& c)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < c.fans.size(); ++p)
        if (triangle_runs(c, c.fans[p]).size() >= 2)
            out.push_back(p);
    return out;
}

std::size_t SplitComplex::boundary_circle_count() const
{
    std::size_t n = 0;
    for (const auto& t : topology)
        n += t.boundary_circles;
    return n;
}

SplitComplex split_triangles(const SurfaceComplex& c)
{
    SplitComplex out;
    // split vertex of every triangle corner, keyed by (disk, corner)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> corner_vertex;
    for (std::size_t p = 0; p < c.fans.size(); ++p) {
        const auto& fan = c.fans[p];
        for (const auto& run : triangle_runs(c, fan)) {
            const std::size_t id = out.point_of_vertex.size();
            out.point_of_vertex.push_back(p);
            for (std::size_t k = 0; k < run.length; ++k) {
                const auto& fc = fan.corners[(run.first + k) % fan.corners.size()];
                corner_vertex[{fc.face, fc.corner}] = id;
            }
        }
    }
    out.cells.vertex_count = out.point_of_vertex.size();

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> edge_map(c.cells.edges.size(), unset);
    for (std::size_t d = 0; d < c.disks.size(); ++d) {
        if (!c.disks[d].type.is_triangle())
            continue;
        const auto& sides = c.cells.faces[d].sides;
        CellComplex::Face face;
        for (std::size_t k = 0; k < sides.size(); ++k) {
            const auto& s = sides[k];
            const std::size_t from = corner_vertex.at({d, k});
            const std::size_t to = corner_vertex.at({d, (k + 1) % sides.size()});
            CellComplex::Edge e;
            e.ends[s.forward ? 0 : 1] = from;
            e.ends[s.forward ? 1 : 0] = to;
            if (edge_map[s.edge] == unset) {
                edge_map[s.edge] = out.cells.edges.size();
                out.cells.edges.push_back(e);
            } else {
                const auto& prev = out.cells.edges[edge_map[s.edge]];
                if (prev.ends[0] != e.ends[0] || prev.ends[1] != e.ends[1])
                    throw DecompositionError("triangles sharing an arc disagree on its split endpoints");
            }
            face.sides.push_back({edge_map[s.edge], s.forward});
        }
        out.cells.faces.push_back(std::move(face));
        out.disk_of_face.push_back(d);
    }
    out.partition = components(out.cells);
    out.topology = component_topology(out.cells, out.partition);
    return out;
}

Weights weights(const SurfaceComplex& c)
{
    Weights w;
    std::vector<int> quad_sides(c.cells.edges.size(), 0);
    for (std::size_t d = 0; d < c.disks.size(); ++d)
        if (!c.disks[d].type.is_triangle())
            for (const auto& s : c.cells.faces[d].sides)
                ++quad_sides[s.edge];
    w.arc_weight.assign(c.cells.edges.size(), 0);
    for (std::size_t e = 0; e < quad_sides.size(); ++e) {
        if (quad_sides[e] == 0)
            continue;
        const int weight = quad_sides[e] >= 2 ? 2 : 1;
        w.arc_weight[e] = weight;
        w.weight_b += weight;
        if (weight == 1)
            ++w.weight_boundary_b;
    }
    return w;
}

std::vector<TriangleComponent> strongly_connected_components(const SurfaceComplex& c, const Skeleton& skel)
{
    const std::size_t nd = c.disks.size();
    UnionFind uf(nd);
    std::vector<std::size_t> first(c.cells.edges.size(), nd);
    for (std::size_t d = 0; d < nd; ++d) {
        if (!c.disks[d].type.is_triangle())
            continue;
        for (const auto& s : c.cells.faces[d].sides) {
            if (first[s.edge] == nd)
                first[s.edge] = d;
            else
                uf.unite(first[s.edge], d);
        }
    }
    std::vector<TriangleComponent> out;
    std::vector<std::size_t> label(nd, nd);
    for (std::size_t d = 0; d < nd; ++d) {
        const auto& type = c.disks[d].type;
        if (!type.is_triangle())
            continue;
        const auto r = uf.find(d);
        const std::size_t vertex = skel.vertex_of(type.tet, type.index);
        if (label[r] == nd) {
            label[r] = out.size();
            out.push_back({{}, vertex});
        }
        auto& comp = out[label[r]];
        if (comp.linked_vertex != vertex)
            throw DecompositionError("mixed linked vertices in one component");
        comp.disks.push_back(d);
    }
    return out;
}

std::vector<std::size_t> GammaGraph::degrees() const
{
    std::vector<std::size_t> deg(q_vertices + s_vertices, 0);
    for (const auto& e : edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

std::size_t GammaGraph::q_degree_total() const
{
    const auto deg = degrees();
    std::size_t n = 0;
    for (std::size_t i = 0; i < q_vertices; ++i)
        n += deg[i];
    return n;
}

std::size_t GammaGraph::s_degree_total() const
{
    const auto deg = degrees();
    std::size_t n = 0;
    for (std::size_t i = q_vertices; i < deg.size(); ++i)
        n += deg[i];
    return n;
}

GammaGraph gamma_graph(const SurfaceComplex& c, const std::vector<TriangleComponent>& components, const SurfaceInvariants& inv)
{
    if (inv.has_vertex_linking_component())
        throw DecompositionError("vertex-linking component present");
    GammaGraph g;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> node(c.disks.size(), none);
    for (std::size_t d = 0; d < c.disks.size(); ++d) {
        if (!c.disks[d].type.is_triangle()) {
            node[d] = g.q_vertices++;
            g.quad_disks.push_back(d);
        }
    }
    g.s_vertices = components.size();
    for (std::size_t k = 0; k < components.size(); ++k)
        for (auto d : components[k].disks)
            node[d] = g.q_vertices + k;

    std::vector<std::vector<std::size_t>> on_arc(c.cells.edges.size());
    for (std::size_t d = 0; d < c.disks.size(); ++d)
        for (const auto& s : c.cells.faces[d].sides)
            on_arc[s.edge].push_back(d);
    for (std::size_t e = 0; e < on_arc.size(); ++e) {
        if (on_arc[e].size() != 2)
            continue;
        const auto d1 = on_arc[e][0];
        const auto d2 = on_arc[e][1];
        if (c.disks[d1].type.is_triangle() && c.disks[d2].type.is_triangle())
            continue;
        g.edges.push_back({node[d1], node[d2], e});
    }
    return g;
}

Decomposition decompose(const SurfaceComplex& c, const Skeleton& skel, const SurfaceInvariants& inv)
{
    Decomposition dec;
    for (std::size_t d = 0; d < c.disks.size(); ++d)
        (c.disks[d].type.is_triangle() ? dec.a_disks : dec.b_disks).push_back(d);
    dec.omega = singular_points(c);
    dec.a_prime = split_triangles(c);
    dec.components = strongly_connected_components(c, skel);
    dec.a_prime_components = dec.a_prime.component_count();
    dec.a_prime_boundary = dec.a_prime.boundary_circle_count();
    dec.chi_a_prime = dec.a_prime.chi();
    dec.chi_b_prime = inv.chi - dec.chi_a_prime;
    dec.weight = weights(c);

    // Boundary of B' traced from the quad side: weight-1 arcs joined across
    // quad runs at ordinary points and across triangle runs at singular ones.
    UnionFind uf(c.cells.edges.size());
    std::vector<bool> singular(c.fans.size(), false);
    for (auto p : dec.omega)
        singular[p] = true;
    for (std::size_t p = 0; p < c.fans.size(); ++p) {
        const auto& fan = c.fans[p];
        const auto runs = singular[p] ? triangle_runs(c, fan) : quad_runs(c, fan);
        for (const auto& r : runs) {
            if (!fan.closed && (r.first == 0 || r.first + r.length == fan.corners.size()) && singular[p])
                continue;
            const auto [lo, hi] = run_bounds(fan, r);
            if (dec.weight.arc_weight[lo.edge] == 1 && dec.weight.arc_weight[hi.edge] == 1)
                uf.unite(lo.edge, hi.edge);
        }
    }
    for (std::size_t e = 0; e < c.cells.edges.size(); ++e)
        if (dec.weight.arc_weight[e] == 1 && uf.find(e) == e)
            ++dec.b_prime_boundary;
    return dec;
}

} // namespace nsurf
