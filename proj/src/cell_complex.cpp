#include "nsurf/cell_complex.hpp"

#include "nsurf/union_find.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace nsurf {

std::vector<std::size_t> CellComplex::edge_incidence() const
{
    std::vector<std::size_t> inc(edges.size(), 0);
    for (const auto& f : faces)
        for (const auto& s : f.sides)
            ++inc[s.edge];
    return inc;
}

std::int64_t CellComplex::euler_characteristic() const
{
    return static_cast<std::int64_t>(vertex_count) - static_cast<std::int64_t>(edges.size()) + static_cast<std::int64_t>(faces.size());
}

std::vector<Fan> vertex_fans(const CellComplex& c)
{
    struct CornerEnds {
        std::size_t face;
        std::size_t corner;
        EdgeEnd ends[2]; // 0: incoming side, 1: outgoing side
    };
    std::vector<std::vector<std::size_t>> at_vertex(c.vertex_count);
    std::vector<CornerEnds> corners;
    std::map<EdgeEnd, std::vector<std::pair<std::size_t, int>>> usage;

    const auto inc = c.edge_incidence();
    for (std::size_t e = 0; e < inc.size(); ++e)
        if (inc[e] == 0 || inc[e] > 2)
            throw NonManifoldError("1-cell " + std::to_string(e) + " lies on " + std::to_string(inc[e]) + " polygon sides");

    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        const auto& sides = c.faces[f].sides;
        for (std::size_t i = 0; i < sides.size(); ++i) {
            const auto& in = sides[(i + sides.size() - 1) % sides.size()];
            const auto& out = sides[i];
            CornerEnds ce{f, i, {EdgeEnd{in.edge, in.forward ? 1 : 0}, EdgeEnd{out.edge, out.forward ? 0 : 1}}};
            const std::size_t id = corners.size();
            corners.push_back(ce);
            at_vertex[c.corner_vertex(f, i)].push_back(id);
            usage[ce.ends[0]].emplace_back(id, 0);
            usage[ce.ends[1]].emplace_back(id, 1);
        }
    }

    auto other_use = [&](std::size_t corner, int slot) -> std::optional<std::pair<std::size_t, int>> {
        for (const auto& u : usage.at(corners[corner].ends[slot]))
            if (u != std::pair<std::size_t, int>{corner, slot})
                return u;
        return std::nullopt;
    };

    std::vector<Fan> fans(c.vertex_count);
    std::vector<bool> visited(corners.size(), false);
    for (std::size_t v = 0; v < c.vertex_count; ++v) {
        const auto& here = at_vertex[v];
        if (here.empty())
            throw NonManifoldError("vertex " + std::to_string(v) + " has no incident polygon");
        std::size_t start = here.front();
        int exit_slot = 1;
        bool closed = true;
        for (auto id : here) {
            for (int s = 0; s < 2; ++s) {
                if (!other_use(id, s)) {
                    start = id;
                    exit_slot = 1 - s;
                    closed = false;
                    break;
                }
            }
            if (!closed)
                break;
        }
        Fan fan;
        fan.closed = closed;
        std::size_t cur = start;
        if (!closed)
            fan.links.push_back(corners[start].ends[1 - exit_slot]);
        for (;;) {
            if (visited[cur])
                throw NonManifoldError("fan at vertex " + std::to_string(v) + " revisits a corner");
            visited[cur] = true;
            fan.corners.push_back({corners[cur].face, corners[cur].corner});
            fan.links.push_back(corners[cur].ends[exit_slot]);
            const auto nxt = other_use(cur, exit_slot);
            if (!nxt) {
                if (closed)
                    throw NonManifoldError("fan at vertex " + std::to_string(v) + " is inconsistent");
                break;
            }
            if (closed && nxt->first == start)
                break;
            cur = nxt->first;
            exit_slot = 1 - nxt->second;
        }
        if (closed)
            std::rotate(fan.links.rbegin(), fan.links.rbegin() + 1, fan.links.rend());
        if (fan.corners.size() != here.size())
            throw NonManifoldError("vertex " + std::to_string(v) + " is a cone over " + std::to_string(here.size() - fan.corners.size() + 1) +
                                   " or more fans");
        fans[v] = std::move(fan);
    }
    return fans;
}

ComponentPartition components(const CellComplex& c)
{
    UnionFind uf(c.faces.size());
    std::vector<std::size_t> first_face(c.edges.size(), c.faces.size());
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        for (const auto& s : c.faces[f].sides) {
            if (first_face[s.edge] == c.faces.size())
                first_face[s.edge] = f;
            else
                uf.unite(first_face[s.edge], f);
        }
    }
    ComponentPartition p;
    p.face_component.resize(c.faces.size());
    std::vector<std::size_t> label(c.faces.size(), c.faces.size());
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        const auto r = uf.find(f);
        if (label[r] == c.faces.size())
            label[r] = p.count++;
        p.face_component[f] = label[r];
    }
    p.edge_component.assign(c.edges.size(), 0);
    p.vertex_component.assign(c.vertex_count, 0);
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        for (std::size_t i = 0; i < c.faces[f].sides.size(); ++i) {
            p.edge_component[c.faces[f].sides[i].edge] = p.face_component[f];
            p.vertex_component[c.corner_vertex(f, i)] = p.face_component[f];
        }
    }
    return p;
}

std::vector<std::size_t> boundary_circles(const CellComplex& c, const ComponentPartition& parts)
{
    const auto inc = c.edge_incidence();
    UnionFind uf(c.edges.size());
    std::vector<std::size_t> seen_at(c.vertex_count, c.edges.size());
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (inc[e] != 1)
            continue;
        for (auto v : c.edges[e].ends) {
            if (seen_at[v] == c.edges.size())
                seen_at[v] = e;
            else
                uf.unite(seen_at[v], e);
        }
    }
    std::vector<std::size_t> count(parts.count, 0);
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (inc[e] == 1 && uf.find(e) == e)
            ++count[parts.edge_component[e]];
    return count;
}

std::size_t rank_mod2(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns)
{
    const std::size_t words = (columns + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::uint64_t> bits(words, 0);
        for (auto col : r)
            bits[col / 64] ^= std::uint64_t{1} << (col % 64);
        m.push_back(std::move(bits));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < m.size() && (m[pivot][w] & bit) == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && (m[r][w] & bit) != 0)
                for (std::size_t k = 0; k < words; ++k)
                    m[r][k] ^= m[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Consistent orientation propagation over shared 1-cells.
std::vector<bool> orientable_components(const CellComplex& c, const ComponentPartition& parts)
{
    std::vector<std::vector<std::pair<std::size_t, bool>>> on_edge(c.edges.size());
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (const auto& s : c.faces[f].sides)
            on_edge[s.edge].emplace_back(f, s.forward);

    std::vector<int> orient(c.faces.size(), 0);
    std::vector<bool> ok(parts.count, true);
    for (std::size_t seed = 0; seed < c.faces.size(); ++seed) {
        if (orient[seed] != 0)
            continue;
        orient[seed] = 1;
        std::queue<std::size_t> q;
        q.push(seed);
        while (!q.empty()) {
            const auto f = q.front();
            q.pop();
            for (const auto& s : c.faces[f].sides) {
                const auto& users = on_edge[s.edge];
                if (users.size() != 2)
                    continue;
                const auto& [f1, fw1] = users[0];
                const auto& [f2, fw2] = users[1];
                const int d1 = fw1 ? 1 : -1;
                const int d2 = fw2 ? 1 : -1;
                // neighbours traverse a shared 1-cell in opposite directions
                if (f1 == f2) {
                    if (d1 == d2)
                        ok[parts.face_component[f]] = false;
                    continue;
                }
                const std::size_t other = f1 == f ? f2 : f1;
                const int want = -orient[f] * d1 * d2;
                if (orient[other] == 0) {
                    orient[other] = want;
                    q.push(other);
                } else if (orient[other] != want) {
                    ok[parts.face_component[f]] = false;
                }
            }
        }
    }
    return ok;
}

} // namespace

std::vector<ComponentTopology> component_topology(const CellComplex& c, const ComponentPartition& parts)
{
    std::vector<ComponentTopology> out(parts.count);
    std::vector<std::size_t> vlocal(c.vertex_count);
    std::vector<std::size_t> elocal(c.edges.size());
    for (std::size_t v = 0; v < c.vertex_count; ++v)
        vlocal[v] = out[parts.vertex_component[v]].vertices++;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        elocal[e] = out[parts.edge_component[e]].edges++;

    std::vector<std::vector<std::vector<std::size_t>>> d1(parts.count);
    std::vector<std::vector<std::vector<std::size_t>>> d2(parts.count);
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        d1[parts.edge_component[e]].push_back({vlocal[c.edges[e].ends[0]], vlocal[c.edges[e].ends[1]]});
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        auto& comp = out[parts.face_component[f]];
        ++comp.faces;
        std::vector<std::size_t> row;
        for (const auto& s : c.faces[f].sides)
            row.push_back(elocal[s.edge]);
        d2[parts.face_component[f]].push_back(std::move(row));
    }

    const auto orientable = orientable_components(c, parts);
    const auto circles = boundary_circles(c, parts);
    for (std::size_t k = 0; k < parts.count; ++k) {
        auto& t = out[k];
        t.chi = static_cast<std::int64_t>(t.vertices) - static_cast<std::int64_t>(t.edges) + static_cast<std::int64_t>(t.faces);
        t.orientable = orientable[k];
        t.boundary_circles = circles[k];
        const auto r1 = rank_mod2(d1[k], t.vertices);
        const auto r2 = rank_mod2(d2[k], t.edges);
        t.betti0 = t.vertices - r1;
        t.betti1 = t.edges - r1 - r2;
        t.betti2 = t.faces - r2;

        const auto b = static_cast<std::int64_t>(t.boundary_circles);
        const auto h1 = static_cast<std::int64_t>(t.betti1);
        // H1(Z/2) of a connected surface: 2g or k when closed, plus b - 1 with boundary
        const std::int64_t handles = t.closed() ? h1 : h1 - b + 1;
        bool ok = t.betti0 == 1 && t.betti2 == (t.closed() ? 1u : 0u) && handles >= 0;
        if (t.orientable) {
            ok = ok && handles % 2 == 0;
            t.genus = handles / 2;
            t.chi_classified = 2 - 2 * t.genus - b;
        } else {
            ok = ok && handles >= 1;
            t.genus = handles;
            t.chi_classified = 2 - t.genus - b;
        }
        t.classification_consistent = ok;
    }
    return out;
}

} // namespace nsurf
