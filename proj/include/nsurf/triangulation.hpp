#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsurf {

/// Permutation of the four corners {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    constexpr explicit Perm4(std::array<std::uint8_t, 4> image) : image_(image) {}

    constexpr int operator[](int corner) const { return image_[static_cast<std::size_t>(corner)]; }

    constexpr Perm4 inverse() const
    {
        std::array<std::uint8_t, 4> inv{};
        for (std::uint8_t i = 0; i < 4; ++i)
            inv[image_[i]] = i;
        return Perm4(inv);
    }

    bool is_bijection() const;

    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;

private:
    std::array<std::uint8_t, 4> image_;
};

struct FaceRef {
    std::size_t tet = 0;
    int face = 0;

    friend constexpr auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Gluing of a face onto another face. The permutation maps every corner of
/// the source tetrahedron; it sends the source face's opposite corner to the
/// target face's opposite corner.
struct Gluing {
    std::size_t tet = 0;
    int face = 0;
    Perm4 perm;

    friend bool operator==(const Gluing&, const Gluing&) = default;
};

class TriangulationError : public std::runtime_error {
public:
    TriangulationError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A (pseudo-)triangulation: tetrahedra with face gluings. Immutable once built.
class Triangulation {
public:
    /// Validates the involution and bijection invariants; throws TriangulationError
    /// (line 0) on violation.
    explicit Triangulation(std::vector<std::array<std::optional<Gluing>, 4>> gluings);

    std::size_t size() const noexcept { return gluings_.size(); }
    const std::optional<Gluing>& gluing(std::size_t tet, int face) const
    {
        return gluings_[tet][static_cast<std::size_t>(face)];
    }
    bool is_boundary(std::size_t tet, int face) const { return !gluing(tet, face).has_value(); }
    std::size_t boundary_face_count() const;
    bool is_closed() const { return boundary_face_count() == 0; }

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
};

Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::string& path);

/// Canonical gluing-table text; parse_triangulation(serialize(t)) == t.
std::string serialize(const Triangulation& tri);

/// Corners of a tetrahedron edge, low corner first. Edges are numbered
/// 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<int, 2>, 6> kEdgeCorners{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b)
{
    if (a > b) {
        const int t = a;
        a = b;
        b = t;
    }
    for (int e = 0; e < 6; ++e)
        if (kEdgeCorners[static_cast<std::size_t>(e)][0] == a && kEdgeCorners[static_cast<std::size_t>(e)][1] == b)
            return e;
    return -1;
}

/// The three corners of face `face` (the face opposite that corner), ascending.
constexpr std::array<int, 3> face_corners(int face)
{
    std::array<int, 3> out{};
    std::size_t k = 0;
    for (int c = 0; c < 4; ++c)
        if (c != face)
            out[k++] = c;
    return out;
}

/// Skeleton of a triangulation: identified vertices, edges and faces.
///
/// Vertex classes group tetrahedron corners, edge classes group (tetrahedron,
/// edge) slots and face classes group (tetrahedron, face) slots. Classes are
/// numbered in order of their first slot.
struct Skeleton {
    std::size_t tet_count = 0;

    std::vector<std::size_t> corner_class;           // index 4*tet + corner
    std::vector<std::vector<FaceRef>> vertex_members; // (tet, corner) stored in FaceRef::face
    std::vector<bool> vertex_boundary;

    std::vector<std::size_t> edge_class;  // index 6*tet + edge
    std::vector<bool> edge_flipped;       // slot orientation relative to its class root
    std::vector<std::vector<std::size_t>> edge_members;
    std::vector<bool> edge_boundary;
    std::vector<bool> edge_self_reversed; // glued to itself with reversed orientation

    std::vector<std::size_t> face_class;  // index 4*tet + face
    std::vector<std::vector<FaceRef>> face_members;

    std::size_t vertex_count() const { return vertex_members.size(); }
    std::size_t edge_count() const { return edge_members.size(); }
    std::size_t face_count() const { return face_members.size(); }

    /// Tetrahedron corners in the class; a tetrahedron meeting v at two corners counts twice.
    std::size_t corner_count(std::size_t vertex) const { return vertex_members[vertex].size(); }
    std::size_t edge_degree(std::size_t edge) const { return edge_members[edge].size(); }
    bool face_interior(std::size_t face) const { return face_members[face].size() == 2; }
    std::size_t interior_face_count() const;
    std::size_t boundary_face_count() const;

    std::size_t vertex_of(std::size_t tet, int corner) const { return corner_class[4 * tet + static_cast<std::size_t>(corner)]; }
    std::size_t edge_of(std::size_t tet, int edge) const { return edge_class[6 * tet + static_cast<std::size_t>(edge)]; }
    std::size_t face_of(std::size_t tet, int face) const { return face_class[4 * tet + static_cast<std::size_t>(face)]; }
};

Skeleton compute_skeleton(const Triangulation& tri);

/// Maximum corner count N_v over vertex classes.
std::size_t max_vertex_degree(const Skeleton& skel);

} // namespace nsurf
