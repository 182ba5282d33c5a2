#include "oracles.hpp"

#include "nsurf/triangulation.hpp"

#include <doctest.h>

using namespace nsurf;

namespace {

std::string message_of(std::string_view text)
{
    try {
        parse_triangulation(text);
    } catch (const TriangulationError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("single tetrahedron with boundary faces")
{
    const auto tri = load_triangulation(oracle::fixture("ball1.tri"));
    CHECK(tri.size() == 1);
    CHECK(tri.boundary_face_count() == 4);
    CHECK_FALSE(tri.is_closed());
    const auto skel = compute_skeleton(tri);
    CHECK(skel.vertex_count() == 4);
    CHECK(skel.edge_count() == 6);
    CHECK(skel.face_count() == 4);
    CHECK(skel.interior_face_count() == 0);
    CHECK(max_vertex_degree(skel) == 1);
    for (std::size_t e = 0; e < 6; ++e)
        CHECK(skel.edge_boundary[e]);
}

TEST_CASE("doubled tetrahedron")
{
    const auto tri = load_triangulation(oracle::fixture("s3_double.tri"));
    CHECK(tri.is_closed());
    const auto skel = compute_skeleton(tri);
    CHECK(skel.vertex_count() == 4);
    CHECK(skel.edge_count() == 6);
    CHECK(skel.face_count() == 4);
    CHECK(max_vertex_degree(skel) == 2);
    for (std::size_t e = 0; e < skel.edge_count(); ++e) {
        CHECK(skel.edge_degree(e) == 2);
        CHECK_FALSE(skel.edge_boundary[e]);
    }
}

TEST_CASE("census triangulations have one vertex and vanishing Euler characteristic")
{
    for (const auto& name : oracle::closed_census()) {
        CAPTURE(name);
        const auto tri = load_triangulation(oracle::fixture(name));
        const auto skel = compute_skeleton(tri);
        CHECK(tri.is_closed());
        CHECK(skel.vertex_count() == 1);
        CHECK(skel.corner_count(0) == 4 * tri.size());
        CHECK(max_vertex_degree(skel) == 4 * tri.size());
        CHECK(skel.face_count() == 2 * tri.size());
        // closed 3-manifold: V - E + F - T = 0
        const auto chi = static_cast<long>(skel.vertex_count()) - static_cast<long>(skel.edge_count()) + static_cast<long>(skel.face_count()) -
            static_cast<long>(tri.size());
        CHECK(chi == 0);
        std::size_t slots = 0;
        for (std::size_t e = 0; e < skel.edge_count(); ++e)
            slots += skel.edge_degree(e);
        CHECK(slots == 6 * tri.size());
    }
}

TEST_CASE("serialize round trip")
{
    for (const auto* name : {"ball1.tri", "s3_double.tri", "s3_1tet.tri", "l41.tri", "rp3.tri", "l31.tri", "s2xs1.tri", "l92.tri"}) {
        CAPTURE(name);
        const auto tri = load_triangulation(oracle::fixture(name));
        CHECK(parse_triangulation(serialize(tri)) == tri);
    }
}

TEST_CASE("comments and blank lines are ignored")
{
    const auto tri = parse_triangulation("# header\n\n1\n  # inline\nbdry\nbdry\nbdry\nbdry\n");
    CHECK(tri.size() == 1);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(message_of("1\nbdry\nbdry\n0 1 2x3\nbdry\n").find("line 4") == 0);
    CHECK(message_of("1\nbdry\nbdry\nbdry\n").find("line") == 0);
    CHECK(message_of("1\nbdry\nbdry\nbdry\n2 0 123\n").find("line 5") == 0);

    SUBCASE("non-involutive gluing")
    {
        const auto m = message_of("2\n1 0 123\nbdry\nbdry\nbdry\n0 1 023\nbdry\nbdry\nbdry\n");
        CHECK(m.find("non-involutive") != std::string::npos);
    }
    SUBCASE("face glued to itself")
    {
        const auto m = message_of("1\n0 0 123\nbdry\nbdry\nbdry\n");
        CHECK(m.find("glued to itself") != std::string::npos);
    }
    SUBCASE("non-bijective corner map")
    {
        CHECK_FALSE(message_of("2\n1 0 113\nbdry\nbdry\nbdry\n0 0 123\nbdry\nbdry\nbdry\n").empty());
    }
}

TEST_CASE("missing file")
{
    CHECK_THROWS(load_triangulation(oracle::fixture("does_not_exist.tri")));
}

TEST_CASE("edge orientation of a census edge class")
{
    const auto tri = load_triangulation(oracle::fixture("l41.tri"));
    const auto skel = compute_skeleton(tri);
    // every slot belongs to exactly one class
    std::vector<int> seen(6, 0);
    for (std::size_t e = 0; e < skel.edge_count(); ++e)
        for (auto s : skel.edge_members[e])
            ++seen[s];
    for (int x : seen)
        CHECK(x == 1);
}

namespace {

// Same triangulation with tetrahedron i renamed to order[i].
Triangulation relabel(const Triangulation& tri, const std::vector<std::size_t>& order)
{
    std::vector<std::array<std::optional<Gluing>, 4>> g(tri.size());
    for (std::size_t t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (const auto& src = tri.gluing(t, f))
                g[order[t]][static_cast<std::size_t>(f)] = Gluing{order[src->tet], src->face, src->perm};
    return Triangulation(std::move(g));
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("skeleton counting identities")
{
    for (const auto* name : {"ball1.tri", "s3_double.tri", "s3_1tet.tri", "l41.tri", "rp3.tri", "l31.tri", "s2xs1.tri", "l92.tri"}) {
        CAPTURE(name);
        const auto tri = load_triangulation(oracle::fixture(name));
        const auto skel = compute_skeleton(tri);
        std::size_t corners = 0;
        for (std::size_t v = 0; v < skel.vertex_count(); ++v)
            corners += skel.corner_count(v);
        CHECK(corners == 4 * tri.size());
        std::size_t degrees = 0;
        for (std::size_t e = 0; e < skel.edge_count(); ++e)
            degrees += skel.edge_degree(e);
        CHECK(degrees == 6 * tri.size());
        CHECK(2 * skel.interior_face_count() + skel.boundary_face_count() == 4 * tri.size());
        for (std::size_t f = 0; f < skel.face_count(); ++f)
            CHECK(skel.face_members[f].size() == (skel.face_interior(f) ? 2u : 1u));
    }
}

TEST_CASE("skeleton does not depend on tetrahedron order")
{
    for (const auto* name : {"s3_double.tri", "rp3.tri", "l92.tri"}) {
        CAPTURE(name);
        const auto tri = load_triangulation(oracle::fixture(name));
        std::vector<std::size_t> order(tri.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = order.size() - 1 - i;
        const auto a = compute_skeleton(tri);
        const auto b = compute_skeleton(relabel(tri, order));
        auto degrees = [](const Skeleton& s) {
            std::vector<std::size_t> v;
            for (std::size_t e = 0; e < s.edge_count(); ++e)
                v.push_back(s.edge_degree(e));
            return sorted(v);
        };
        auto corner_counts = [](const Skeleton& s) {
            std::vector<std::size_t> v;
            for (std::size_t x = 0; x < s.vertex_count(); ++x)
                v.push_back(s.corner_count(x));
            return sorted(v);
        };
        CHECK(degrees(a) == degrees(b));
        CHECK(corner_counts(a) == corner_counts(b));
        CHECK(a.face_count() == b.face_count());
        // recomputing is idempotent
        const auto again = compute_skeleton(tri);
        CHECK(again.edge_class == a.edge_class);
        CHECK(again.corner_class == a.corner_class);
    }
}
