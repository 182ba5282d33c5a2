#pragma once

#include "nsurf/cell_complex.hpp"
#include "nsurf/normal_coords.hpp"
#include "nsurf/triangulation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsurf {

class BuildError : public std::runtime_error {
public:
    enum class Kind { NotAdmissible, MatchingViolated, InconsistentStacking, NonManifoldIdentification };

    BuildError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

const char* to_string(BuildError::Kind kind);

/// A normal surface realised as a cell complex.
///
/// 2-cells are normal disks, 1-cells are normal arcs in the faces of the
/// triangulation, 0-cells are the crossing points on its edges. Faces of
/// `cells` are indexed like `disks`.
struct SurfaceComplex {
    struct Disk {
        DiskType type;
        std::int64_t copy = 0; // 0 is nearest the linked corner (triangles) or the {0,k} side (quads)
    };
    struct Arc {
        std::size_t face_class = 0;
        int linked_corner = 0; // on the canonical side of the face class
        std::int64_t index = 0; // distance from the linked corner
        bool on_boundary = false;
    };
    struct Point {
        std::size_t edge_class = 0;
        std::int64_t position = 0; // from the low corner of the class root slot
    };

    std::size_t tet_count = 0;
    std::vector<Disk> disks;
    std::vector<Arc> arcs;
    std::vector<Point> points;
    CellComplex cells;
    std::vector<Fan> fans; // one per point

    bool empty() const { return disks.empty(); }
};

/// Builds the surface of an admissible, matching normal vector. Throws
/// BuildError on invalid input or degenerate identifications.
SurfaceComplex build_surface(const Triangulation& tri, const Skeleton& skel, const NormalVector& v);
SurfaceComplex build_surface(const Triangulation& tri, const Skeleton& skel, const MatchingSystem& m, const NormalVector& v);

/// Disk counts by type, read off the complex.
NormalVector disk_multiplicities(const SurfaceComplex& c);

struct ComponentInvariants {
    ComponentTopology topology;
    std::int64_t triangles = 0;
    std::int64_t quads = 0;
    bool vertex_linking = false;
    std::optional<std::size_t> linked_vertex;
};

struct SurfaceInvariants {
    std::int64_t chi = 0;
    std::int64_t triangles = 0;
    std::int64_t quads = 0;
    std::size_t corners = 0;
    std::size_t arcs = 0;
    std::size_t disks = 0;
    bool closed = true;
    ComponentPartition partition;
    std::vector<ComponentInvariants> components;

    std::size_t component_count() const { return components.size(); }
    bool has_vertex_linking_component() const;
};

/// Per-component vertex-linking flags: a component is flagged iff it is
/// closed, all triangles, and holds exactly one triangle per corner of a
/// single vertex class.
std::vector<std::optional<std::size_t>> detect_vertex_linking(const SurfaceComplex& c, const Skeleton& skel, const ComponentPartition& parts,
                                                              const std::vector<ComponentTopology>& topo);

SurfaceInvariants invariants(const SurfaceComplex& c, const Skeleton& skel);

} // namespace nsurf
