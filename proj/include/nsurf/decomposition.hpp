#pragma once

#include "nsurf/surface.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nsurf {

/// Maximal runs of triangle corners in a fan, as index ranges into fan.corners.
/// A closed fan made only of triangles is one run covering the whole fan.
struct FanRun {
    std::size_t first = 0; // position in the fan
    std::size_t length = 0;
};

std::vector<FanRun> triangle_runs(const SurfaceComplex& c, const Fan& fan);
std::vector<FanRun> quad_runs(const SurfaceComplex& c, const Fan& fan);

/// 0-cells where the triangles around the point form two or more runs.
std::vector<std::size_t> singular_points(const SurfaceComplex& c);

/// The triangle part with every 0-cell split into one copy per triangle run.
struct SplitComplex {
    CellComplex cells;
    std::vector<std::size_t> disk_of_face;    // surface disk index of each face
    std::vector<std::size_t> point_of_vertex; // surface 0-cell of each split vertex
    ComponentPartition partition;
    std::vector<ComponentTopology> topology;

    std::size_t component_count() const { return partition.count; }
    std::size_t boundary_circle_count() const;
    std::int64_t chi() const { return cells.euler_characteristic(); }
};

SplitComplex split_triangles(const SurfaceComplex& c);

struct Weights {
    std::int64_t weight_b = 0;          // 2 per arc inside B, 1 per arc on its boundary
    std::int64_t weight_boundary_b = 0; // arcs on the boundary of B
    std::vector<int> arc_weight;        // 0 for arcs not in B
};

Weights weights(const SurfaceComplex& c);

class DecompositionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct TriangleComponent {
    std::vector<std::size_t> disks;
    std::size_t linked_vertex = 0;
};

/// Triangles grouped by shared arcs. Throws DecompositionError if one group
/// links two different vertex classes.
std::vector<TriangleComponent> strongly_connected_components(const SurfaceComplex& c, const Skeleton& skel);

struct GammaGraph {
    struct Edge {
        std::size_t a = 0; // vertex ids: quads first, then triangle components
        std::size_t b = 0;
        std::size_t arc = 0;
    };
    std::size_t q_vertices = 0;
    std::size_t s_vertices = 0;
    std::vector<std::size_t> quad_disks; // surface disk index per Q-vertex
    std::vector<Edge> edges;

    std::vector<std::size_t> degrees() const; // loops count twice
    std::size_t q_degree_total() const;
    std::size_t s_degree_total() const;
};

/// Throws DecompositionError if a vertex-linking component is present.
GammaGraph gamma_graph(const SurfaceComplex& c, const std::vector<TriangleComponent>& components, const SurfaceInvariants& inv);

/// Statistics of the triangle/quad decomposition of one surface.
struct Decomposition {
    std::vector<std::size_t> a_disks;
    std::vector<std::size_t> b_disks;
    std::vector<std::size_t> omega;
    SplitComplex a_prime;
    std::vector<TriangleComponent> components;

    std::size_t a_prime_components = 0;
    std::size_t a_prime_boundary = 0; // circles of the boundary of A'
    std::size_t b_prime_boundary = 0; // circles of the boundary of B', traced from the quad side
    std::int64_t chi_a_prime = 0;
    std::int64_t chi_b_prime = 0;     // chi(F) - chi(A')
    Weights weight;
};

Decomposition decompose(const SurfaceComplex& c, const Skeleton& skel, const SurfaceInvariants& inv);

} // namespace nsurf
