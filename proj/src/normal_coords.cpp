#include "nsurf/normal_coords.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace nsurf {

DiskType DiskType::from_coordinate(std::size_t coord)
{
    const std::size_t tet = coord / kDiskTypes;
    const int k = static_cast<int>(coord % kDiskTypes);
    return k < 4 ? triangle(tet, k) : quad(tet, k - 3);
}

NormalVector::NormalVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
{
    if (entries_.size() % kDiskTypes != 0)
        throw CoordinateError("normal vector length " + std::to_string(entries_.size()) + " is not a multiple of 7");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] < 0)
            throw CoordinateError("negative normal coordinate at position " + std::to_string(i));
}

bool NormalVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](auto x) { return x == 0; });
}

std::int64_t NormalVector::triangle_total() const
{
    std::int64_t n = 0;
    for (std::size_t t = 0; t < tet_count(); ++t)
        for (int c = 0; c < 4; ++c)
            n += triangles(t, c);
    return n;
}

std::int64_t NormalVector::quad_total() const
{
    std::int64_t n = 0;
    for (std::size_t t = 0; t < tet_count(); ++t)
        for (int k = 1; k <= 3; ++k)
            n += quads(t, k);
    return n;
}

int NormalVector::quad_type(std::size_t tet) const
{
    for (int k = 1; k <= 3; ++k)
        if (quads(tet, k) != 0)
            return k;
    return 0;
}

NormalVector parse_normal_vector(std::string_view text)
{
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r' || text[i] == ','))
            ++i;
        if (i >= text.size())
            break;
        std::int64_t x = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
        if (ec != std::errc{})
            throw CoordinateError("malformed normal coordinate near '" + std::string(text.substr(i, 8)) + "'");
        i = static_cast<std::size_t>(p - text.data());
        if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r' && text[i] != ',')
            throw CoordinateError("malformed normal coordinate near '" + std::string(text.substr(i, 8)) + "'");
        out.push_back(x);
    }
    if (out.empty())
        throw CoordinateError("empty normal vector");
    return NormalVector(std::move(out));
}

std::string to_string(const NormalVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

std::int64_t MatchingRow::evaluate(const NormalVector& v) const
{
    std::int64_t s = 0;
    for (const auto& [coord, coeff] : terms)
        s += coeff * v[coord];
    return s;
}

std::size_t MatchingSystem::trivial_rows() const
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.trivial(); }));
}

MatchingSystem build_matching_system(const Triangulation& tri, const Skeleton& skel)
{
    MatchingSystem sys;
    sys.tet_count = tri.size();
    for (std::size_t fc = 0; fc < skel.face_count(); ++fc) {
        if (!skel.face_interior(fc))
            continue;
        // members are stored in slot order, so the first is the smaller side
        const FaceRef lo = std::min(skel.face_members[fc][0], skel.face_members[fc][1]);
        const auto& g = *tri.gluing(lo.tet, lo.face);
        for (int a : face_corners(lo.face)) {
            const int b = g.perm[a];
            std::map<std::size_t, std::int64_t> acc;
            acc[DiskType::triangle(lo.tet, a).coordinate()] += 1;
            acc[DiskType::quad(lo.tet, quad_separating(a, lo.face)).coordinate()] += 1;
            acc[DiskType::triangle(g.tet, b).coordinate()] -= 1;
            acc[DiskType::quad(g.tet, quad_separating(b, g.face)).coordinate()] -= 1;
            MatchingRow row;
            row.face_class = fc;
            row.arc_corner = a;
            for (const auto& [coord, coeff] : acc)
                if (coeff != 0)
                    row.terms.emplace_back(coord, coeff);
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

bool is_admissible(const NormalVector& v)
{
    for (std::size_t t = 0; t < v.tet_count(); ++t) {
        int nonzero = 0;
        for (int k = 1; k <= 3; ++k)
            nonzero += v.quads(t, k) != 0 ? 1 : 0;
        if (nonzero > 1)
            return false;
    }
    return true;
}

bool satisfies_matching(const NormalVector& v, const MatchingSystem& m)
{
    if (v.size() != kDiskTypes * m.tet_count)
        throw CoordinateError("normal vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(kDiskTypes * m.tet_count));
    return std::all_of(m.rows.begin(), m.rows.end(), [&](const auto& r) { return r.evaluate(v) == 0; });
}

NormalVector haken_sum(const NormalVector& a, const NormalVector& b)
{
    if (a.size() != b.size())
        throw CoordinateError("cannot add normal vectors of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    NormalVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

} // namespace nsurf
