#include "nsurf/triangulation.hpp"

#include "nsurf/union_find.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace nsurf {

bool Perm4::is_bijection() const
{
    std::array<bool, 4> seen{};
    for (auto v : image_) {
        if (v > 3 || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

namespace {

std::string describe(std::size_t tet, int face) { return "(" + std::to_string(tet) + "," + std::to_string(face) + ")"; }

// Returns an error message, or empty if the gluing of (tet, face) is consistent.
std::string check_gluing(const std::vector<std::array<std::optional<Gluing>, 4>>& gl, std::size_t tet, int face)
{
    const auto& g = gl[tet][static_cast<std::size_t>(face)];
    if (!g)
        return {};
    if (g->tet >= gl.size() || g->face < 0 || g->face > 3)
        return "dangling gluing target " + describe(g->tet, g->face);
    if (!g->perm.is_bijection() || g->perm[face] != g->face)
        return "gluing permutation is not a bijection between the two faces";
    if (g->tet == tet && g->face == face)
        return "face " + describe(tet, face) + " glued to itself";
    const auto& back = gl[g->tet][static_cast<std::size_t>(g->face)];
    if (!back || back->tet != tet || back->face != face || back->perm != g->perm.inverse()) {
        std::string msg = "non-involutive gluing: " + describe(tet, face) + "->" + describe(g->tet, g->face) + " but " +
            describe(g->tet, g->face) + "->";
        msg += back ? describe(back->tet, back->face) : std::string("bdry");
        if (back && back->tet == tet && back->face == face)
            msg += " with a non-inverse corner map";
        return msg;
    }
    return {};
}

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_index(std::string_view tok, std::size_t& out)
{
    if (tok.empty())
        return false;
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && p == end;
}

} // namespace

Triangulation::Triangulation(std::vector<std::array<std::optional<Gluing>, 4>> gluings) : gluings_(std::move(gluings))
{
    if (gluings_.empty())
        throw TriangulationError(0, "triangulation has no tetrahedra");
    for (std::size_t t = 0; t < gluings_.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (auto err = check_gluing(gluings_, t, f); !err.empty())
                throw TriangulationError(0, err);
}

std::size_t Triangulation::boundary_face_count() const
{
    std::size_t n = 0;
    for (const auto& tet : gluings_)
        for (const auto& g : tet)
            n += g ? 0 : 1;
    return n;
}

Triangulation parse_triangulation(std::string_view text)
{
    struct Line {
        std::size_t number;
        std::string_view content;
    };
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++number;
        auto raw = text.substr(pos, nl - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        if (auto content = trim(raw); !content.empty())
            lines.push_back({number, content});
        pos = nl + 1;
    }
    if (lines.empty())
        throw TriangulationError(number, "missing tetrahedron count");

    std::size_t tets = 0;
    if (!parse_index(lines[0].content, tets) || tets == 0)
        throw TriangulationError(lines[0].number, "malformed tetrahedron count '" + std::string(lines[0].content) + "'");
    if (lines.size() != 1 + 4 * tets) {
        const std::size_t at = lines.size() > 1 + 4 * tets ? lines[1 + 4 * tets].number : number;
        throw TriangulationError(at, "expected " + std::to_string(4 * tets) + " gluing lines, found " + std::to_string(lines.size() - 1));
    }

    std::vector<std::array<std::optional<Gluing>, 4>> gl(tets);
    std::vector<std::size_t> line_of(4 * tets);
    for (std::size_t i = 0; i < 4 * tets; ++i) {
        const auto& ln = lines[1 + i];
        const std::size_t tet = i / 4;
        const int face = static_cast<int>(i % 4);
        line_of[i] = ln.number;
        const auto tok = split_ws(ln.content);
        if (tok.size() == 1 && tok[0] == "bdry")
            continue;
        std::size_t tgt = 0;
        std::size_t tgt_face = 0;
        if (tok.size() != 3 || !parse_index(tok[0], tgt) || !parse_index(tok[1], tgt_face) || tok[2].size() != 3)
            throw TriangulationError(ln.number, "malformed gluing line '" + std::string(ln.content) + "'");
        if (tgt >= tets || tgt_face > 3)
            throw TriangulationError(ln.number, "dangling gluing target " + describe(tgt, static_cast<int>(tgt_face)));
        std::array<std::uint8_t, 4> img{};
        img[static_cast<std::size_t>(face)] = static_cast<std::uint8_t>(tgt_face);
        const auto src = face_corners(face);
        for (std::size_t k = 0; k < 3; ++k) {
            const char c = tok[2][k];
            if (c < '0' || c > '3')
                throw TriangulationError(ln.number, "malformed corner map '" + std::string(tok[2]) + "'");
            img[static_cast<std::size_t>(src[k])] = static_cast<std::uint8_t>(c - '0');
        }
        Perm4 perm(img);
        if (!perm.is_bijection())
            throw TriangulationError(ln.number, "corner map '" + std::string(tok[2]) + "' is not a bijection onto face " + std::to_string(tgt_face));
        gl[tet][static_cast<std::size_t>(face)] = Gluing{tgt, static_cast<int>(tgt_face), perm};
    }
    for (std::size_t i = 0; i < 4 * tets; ++i)
        if (auto err = check_gluing(gl, i / 4, static_cast<int>(i % 4)); !err.empty())
            throw TriangulationError(line_of[i], err);
    return Triangulation(std::move(gl));
}

Triangulation load_triangulation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_triangulation(ss.str());
}

std::string serialize(const Triangulation& tri)
{
    std::string out = std::to_string(tri.size()) + "\n";
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) {
                out += "bdry\n";
                continue;
            }
            out += std::to_string(g->tet) + " " + std::to_string(g->face) + " ";
            for (int c : face_corners(f))
                out += static_cast<char>('0' + g->perm[c]);
            out += "\n";
        }
    }
    return out;
}

std::size_t Skeleton::interior_face_count() const
{
    return static_cast<std::size_t>(std::count_if(face_members.begin(), face_members.end(), [](const auto& m) { return m.size() == 2; }));
}

std::size_t Skeleton::boundary_face_count() const { return face_count() - interior_face_count(); }

namespace {

// Numbers the roots of `uf` in order of first appearance among 0..n-1.
std::vector<std::size_t> label_classes(UnionFind& uf, std::size_t& count)
{
    const std::size_t n = uf.size();
    std::vector<std::size_t> root_label(n, n);
    std::vector<std::size_t> label(n);
    count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = uf.find(i);
        if (root_label[r] == n)
            root_label[r] = count++;
        label[i] = root_label[r];
    }
    return label;
}

} // namespace

Skeleton compute_skeleton(const Triangulation& tri)
{
    const std::size_t n = tri.size();
    Skeleton s;
    s.tet_count = n;

    UnionFind corners(4 * n);
    UnionFind edges(6 * n);
    std::vector<std::size_t> reversed_slots;
    for (std::size_t t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g)
                continue;
            const auto fc = face_corners(f);
            for (int c : fc)
                corners.unite(4 * t + static_cast<std::size_t>(c), 4 * g->tet + static_cast<std::size_t>(g->perm[c]));
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = i + 1; j < 3; ++j) {
                    const int a = fc[i];
                    const int b = fc[j];
                    const int ga = g->perm[a];
                    const int gb = g->perm[b];
                    const auto src = 6 * t + static_cast<std::size_t>(edge_index(a, b));
                    const auto dst = 6 * g->tet + static_cast<std::size_t>(edge_index(ga, gb));
                    // a < b, so the slot keeps its direction iff ga < gb
                    if (!edges.unite(src, dst, ga > gb))
                        reversed_slots.push_back(src);
                }
            }
        }
    }

    std::size_t nv = 0;
    s.corner_class = label_classes(corners, nv);
    s.vertex_members.resize(nv);
    s.vertex_boundary.assign(nv, false);
    for (std::size_t i = 0; i < 4 * n; ++i)
        s.vertex_members[s.corner_class[i]].push_back({i / 4, static_cast<int>(i % 4)});

    std::size_t ne = 0;
    s.edge_class = label_classes(edges, ne);
    s.edge_flipped.resize(6 * n);
    s.edge_members.resize(ne);
    s.edge_boundary.assign(ne, false);
    s.edge_self_reversed.assign(ne, false);
    for (std::size_t i = 0; i < 6 * n; ++i) {
        bool p = false;
        edges.find(i, p);
        s.edge_flipped[i] = p;
        s.edge_members[s.edge_class[i]].push_back(i);
    }
    for (auto slot : reversed_slots)
        s.edge_self_reversed[s.edge_class[slot]] = true;

    s.face_class.assign(4 * n, 0);
    std::vector<bool> seen(4 * n, false);
    for (std::size_t t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto idx = 4 * t + static_cast<std::size_t>(f);
            if (seen[idx])
                continue;
            const auto id = s.face_members.size();
            s.face_members.push_back({{t, f}});
            seen[idx] = true;
            s.face_class[idx] = id;
            if (const auto& g = tri.gluing(t, f)) {
                const auto other = 4 * g->tet + static_cast<std::size_t>(g->face);
                s.face_members.back().push_back({g->tet, g->face});
                seen[other] = true;
                s.face_class[other] = id;
            } else {
                for (int c : face_corners(f))
                    s.vertex_boundary[s.vertex_of(t, c)] = true;
                const auto fc = face_corners(f);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = i + 1; j < 3; ++j)
                        s.edge_boundary[s.edge_of(t, edge_index(fc[i], fc[j]))] = true;
            }
        }
    }
    return s;
}

std::size_t max_vertex_degree(const Skeleton& skel)
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < skel.vertex_count(); ++v)
        best = std::max(best, skel.corner_count(v));
    return best;
}

} // namespace nsurf
