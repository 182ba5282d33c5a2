#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nsurf {

/// A 2-complex whose 2-cells are polygons glued along 1-cells.
///
/// Every 1-cell has two ends; a polygon side traverses its 1-cell either from
/// end 0 to end 1 (forward) or back. Corner i of a polygon is the start of
/// side i, so corner i sits between side i-1 and side i.
struct CellComplex {
    struct Edge {
        std::size_t ends[2] = {0, 0};
    };
    struct Side {
        std::size_t edge = 0;
        bool forward = true;
    };
    struct Face {
        std::vector<Side> sides;
    };

    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    std::size_t start_vertex(const Side& s) const { return edges[s.edge].ends[s.forward ? 0 : 1]; }
    std::size_t end_vertex(const Side& s) const { return edges[s.edge].ends[s.forward ? 1 : 0]; }
    std::size_t corner_vertex(std::size_t face, std::size_t corner) const { return start_vertex(faces[face].sides[corner]); }

    /// Number of polygon sides on each 1-cell.
    std::vector<std::size_t> edge_incidence() const;

    std::int64_t euler_characteristic() const;
};

/// An end of a 1-cell, seen from the vertex it sits on.
struct EdgeEnd {
    std::size_t edge = 0;
    int end = 0;

    friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Polygon corners around one vertex, in order. `closed` fans wrap around.
///
/// links[k] is the 1-cell end between corners[k-1] and corners[k]; for a
/// closed fan links[0] joins the last corner to the first, for an open fan
/// links[0] and links[n] are the two free ends.
struct Fan {
    struct Corner {
        std::size_t face = 0;
        std::size_t corner = 0;
    };
    std::vector<Corner> corners;
    std::vector<EdgeEnd> links;
    bool closed = false;
};

class NonManifoldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One fan per vertex. Throws NonManifoldError unless the corners at every
/// vertex form exactly one fan and every 1-cell carries one or two sides.
std::vector<Fan> vertex_fans(const CellComplex& c);

/// Connected pieces of a complex, joined through shared 1-cells.
struct ComponentPartition {
    std::vector<std::size_t> face_component;
    std::vector<std::size_t> edge_component;
    std::vector<std::size_t> vertex_component;
    std::size_t count = 0;
};

ComponentPartition components(const CellComplex& c);

/// Topological summary of one connected surface component.
struct ComponentTopology {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::int64_t chi = 0;
    bool orientable = true;
    std::size_t boundary_circles = 0;
    /// Betti numbers over Z/2.
    std::size_t betti0 = 0;
    std::size_t betti1 = 0;
    std::size_t betti2 = 0;
    /// Orientable genus, or crosscap count for non-orientable components,
    /// derived from the Z/2 first Betti number.
    std::int64_t genus = 0;
    /// 2 - 2g - b (orientable) or 2 - k - b, from the classification data.
    std::int64_t chi_classified = 0;
    bool classification_consistent = true;

    bool closed() const { return boundary_circles == 0; }
    bool planar() const { return orientable && genus == 0 && classification_consistent; }
};

std::vector<ComponentTopology> component_topology(const CellComplex& c, const ComponentPartition& parts);

/// Boundary 1-cells grouped into circles; returns circle count per component.
std::vector<std::size_t> boundary_circles(const CellComplex& c, const ComponentPartition& parts);

/// Rank over Z/2 of a 0/1 matrix given as rows of column indices (with repeats cancelling).
std::size_t rank_mod2(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns);

} // namespace nsurf
