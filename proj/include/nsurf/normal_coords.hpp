#pragma once

#include "nsurf/triangulation.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsurf {

/// Coordinates per tetrahedron: four triangle types then three quad types.
inline constexpr std::size_t kDiskTypes = 7;

/// Quad type k (1..3) separates corners {0, k} from the other two.
constexpr int quad_separating(int x, int y)
{
    if (x == 0)
        return y;
    if (y == 0)
        return x;
    return 6 - x - y;
}

/// True if quad type k puts corners a and b on opposite sides.
constexpr bool quad_crosses_edge(int quad, int a, int b) { return quad_separating(a, b) != quad; }

/// Corners on the {0, k} side of quad type k, then the other side (each ascending).
constexpr std::array<int, 4> quad_sides(int quad)
{
    std::array<int, 4> out{0, quad, 0, 0};
    std::size_t k = 2;
    for (int c = 1; c < 4; ++c)
        if (c != quad)
            out[k++] = c;
    return out;
}

struct DiskType {
    enum class Kind : std::uint8_t { Triangle, Quad };

    std::size_t tet = 0;
    Kind kind = Kind::Triangle;
    int index = 0; // linked corner 0..3 for triangles, partition 1..3 for quads

    static DiskType triangle(std::size_t tet, int corner) { return {tet, Kind::Triangle, corner}; }
    static DiskType quad(std::size_t tet, int k) { return {tet, Kind::Quad, k}; }
    static DiskType from_coordinate(std::size_t coord);

    bool is_triangle() const { return kind == Kind::Triangle; }
    std::size_t coordinate() const { return kDiskTypes * tet + static_cast<std::size_t>(is_triangle() ? index : 3 + index); }

    friend auto operator<=>(const DiskType&, const DiskType&) = default;
};

class CoordinateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Normal coordinates: 7 non-negative entries per tetrahedron laid out as
/// [T0, T1, T2, T3, Q1, Q2, Q3].
class NormalVector {
public:
    NormalVector() = default;
    explicit NormalVector(std::size_t tet_count) : entries_(kDiskTypes * tet_count, 0) {}
    /// Throws CoordinateError on negative entries or a length that is not a multiple of 7.
    explicit NormalVector(std::vector<std::int64_t> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t tet_count() const noexcept { return entries_.size() / kDiskTypes; }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t& operator[](std::size_t i) { return entries_[i]; }
    std::int64_t triangles(std::size_t tet, int corner) const { return entries_[kDiskTypes * tet + static_cast<std::size_t>(corner)]; }
    std::int64_t quads(std::size_t tet, int k) const { return entries_[kDiskTypes * tet + 3 + static_cast<std::size_t>(k)]; }
    std::int64_t count(const DiskType& d) const { return entries_[d.coordinate()]; }
    std::span<const std::int64_t> entries() const { return entries_; }

    bool is_zero() const;
    std::int64_t triangle_total() const;
    std::int64_t quad_total() const;

    /// The nonzero quad type of a tetrahedron, 0 if none (assumes admissible).
    int quad_type(std::size_t tet) const;

    friend auto operator<=>(const NormalVector&, const NormalVector&) = default;

private:
    std::vector<std::int64_t> entries_;
};

NormalVector parse_normal_vector(std::string_view text);
std::string to_string(const NormalVector& v);

/// One matching equation as sparse (coordinate, coefficient) terms, sorted
/// by coordinate with zero coefficients removed.
struct MatchingRow {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::size_t face_class = 0;
    int arc_corner = 0; // corner of the canonical face side linked by the arc
    bool trivial() const { return terms.empty(); }

    std::int64_t evaluate(const NormalVector& v) const;
};

struct MatchingSystem {
    std::size_t tet_count = 0;
    std::vector<MatchingRow> rows;

    std::size_t trivial_rows() const;
};

/// Three equations per interior face class; the lexicographically smaller
/// (tet, face) side carries the +1 coefficients.
MatchingSystem build_matching_system(const Triangulation& tri, const Skeleton& skel);

bool is_admissible(const NormalVector& v);
bool satisfies_matching(const NormalVector& v, const MatchingSystem& m);
NormalVector haken_sum(const NormalVector& a, const NormalVector& b);

} // namespace nsurf
