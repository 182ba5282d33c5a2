#include "oracles.hpp"

#include "nsurf/decomposition.hpp"
#include "nsurf/enumeration.hpp"

#include <doctest.h>

using namespace nsurf;

namespace {

struct Built {
    Triangulation tri;
    Skeleton skel;
    SurfaceComplex c;
    SurfaceInvariants inv;

    Built(const std::string& name, const std::string& v)
        : tri(load_triangulation(oracle::fixture(name))), skel(compute_skeleton(tri)), c(build_surface(tri, skel, parse_normal_vector(v))),
          inv(invariants(c, skel))
    {
    }
};

std::vector<std::pair<std::string, NormalVector>> all_surfaces()
{
    std::vector<std::pair<std::string, NormalVector>> out;
    for (const auto* name : {"ball1.tri", "s3_double.tri", "s3_1tet.tri", "l41.tri", "rp3.tri", "l31.tri", "s2xs1.tri", "l92.tri"}) {
        const auto tri = load_triangulation(oracle::fixture(name));
        EnumerationConfig cfg;
        cfg.max_coordinate = 2;
        for (auto& v : enumerate_admissible(build_matching_system(tri, compute_skeleton(tri)), cfg))
            out.emplace_back(name, std::move(v));
    }
    return out;
}

} // namespace

TEST_CASE("all-triangle and all-quad surfaces have no singular points")
{
    const Built link("s3_double.tri", "1 0 0 0 0 0 0  1 0 0 0 0 0 0");
    CHECK(singular_points(link.c).empty());
    const Built quads("s3_double.tri", "0 0 0 0 1 0 0  0 0 0 0 1 0 0");
    CHECK(singular_points(quads.c).empty());
}

TEST_CASE("split complex examples")
{
    SUBCASE("vertex-linking sphere")
    {
        const Built b("s3_double.tri", "1 0 0 0 0 0 0  1 0 0 0 0 0 0");
        const auto d = decompose(b.c, b.skel, b.inv);
        CHECK(d.a_prime_components == 1);
        CHECK(d.a_prime_boundary == 0);
        CHECK(d.chi_a_prime == 2);
        CHECK(d.chi_b_prime == 0);
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].disks.size() == 2);
        CHECK(d.components[0].disks.size() <= b.skel.corner_count(d.components[0].linked_vertex));
    }
    SUBCASE("single triangle in the ball")
    {
        const Built b("ball1.tri", "1 0 0 0 0 0 0");
        const auto a = split_triangles(b.c);
        CHECK(a.component_count() == 1);
        CHECK(a.boundary_circle_count() == 1);
        CHECK(a.chi() == 1);
    }
}

TEST_CASE("weights")
{
    SUBCASE("single quad in the ball")
    {
        const Built b("ball1.tri", "0 0 0 0 1 0 0");
        const auto w = weights(b.c);
        CHECK(w.weight_b == 4);
        CHECK(w.weight_boundary_b == 4);
    }
    SUBCASE("two-quad sphere")
    {
        const Built b("s3_double.tri", "0 0 0 0 1 0 0  0 0 0 0 1 0 0");
        const auto w = weights(b.c);
        CHECK(w.weight_b == 8);
        CHECK(w.weight_boundary_b == 0);
        for (int x : w.arc_weight)
            CHECK(x == 2);
    }
}

TEST_CASE("triangle components")
{
    const Built quads("s3_double.tri", "0 0 0 0 1 0 0  0 0 0 0 1 0 0");
    CHECK(strongly_connected_components(quads.c, quads.skel).empty());
}

TEST_CASE("gamma graph examples")
{
    SUBCASE("two-quad sphere")
    {
        const Built b("s3_double.tri", "0 0 0 0 1 0 0  0 0 0 0 1 0 0");
        const auto g = gamma_graph(b.c, strongly_connected_components(b.c, b.skel), b.inv);
        CHECK(g.q_vertices == 2);
        CHECK(g.s_vertices == 0);
        REQUIRE(g.edges.size() == 4);
        for (const auto& e : g.edges) {
            CHECK(e.a != e.b);
            CHECK(e.a < 2);
            CHECK(e.b < 2);
        }
        CHECK(g.degrees() == std::vector<std::size_t>{4, 4});
    }
    SUBCASE("single quad in the ball")
    {
        const Built b("ball1.tri", "0 0 0 0 1 0 0");
        const auto g = gamma_graph(b.c, strongly_connected_components(b.c, b.skel), b.inv);
        CHECK(g.q_vertices == 1);
        CHECK(g.edges.empty());
        CHECK(g.degrees() == std::vector<std::size_t>{0});
    }
    SUBCASE("refused when a vertex link is present")
    {
        const Built b("s3_double.tri", "1 0 0 0 0 0 0  1 0 0 0 0 0 0");
        CHECK_THROWS_AS(gamma_graph(b.c, strongly_connected_components(b.c, b.skel), b.inv), DecompositionError);
    }
}

TEST_CASE("singular points agree with the link-graph oracle")
{
    std::size_t mixed = 0;
    std::size_t with_singular = 0;
    for (const auto& [name, v] : all_surfaces()) {
        CAPTURE(name);
        CAPTURE(to_string(v));
        const auto tri = load_triangulation(oracle::fixture(name));
        const auto skel = compute_skeleton(tri);
        const auto c = build_surface(tri, skel, v);
        const auto got = singular_points(c);
        CHECK(got == oracle::singular_points(c));
        mixed += v.triangle_total() > 0 && v.quad_total() > 0;
        with_singular += !got.empty();
    }
    CHECK(mixed > 0);
    CHECK(with_singular > 0);
}

TEST_CASE("decomposition identities on every enumerated surface")
{
    for (const auto& [name, v] : all_surfaces()) {
        CAPTURE(name);
        CAPTURE(to_string(v));
        const auto tri = load_triangulation(oracle::fixture(name));
        const auto skel = compute_skeleton(tri);
        const auto c = build_surface(tri, skel, v);
        const auto inv = invariants(c, skel);
        const auto d = decompose(c, skel, inv);

        CHECK(d.weight.weight_b == 4 * inv.quads);
        CHECK(d.a_disks.size() == static_cast<std::size_t>(inv.triangles));
        CHECK(d.b_disks.size() == static_cast<std::size_t>(inv.quads));
        // F = A' u B' glued along circles
        CHECK(d.chi_a_prime + oracle::chi_b_prime(c) == inv.chi);
        CHECK(d.chi_b_prime == oracle::chi_b_prime(c));
        std::size_t in_components = 0;
        for (const auto& comp : d.components) {
            in_components += comp.disks.size();
            CHECK(comp.disks.size() <= skel.corner_count(comp.linked_vertex));
        }
        CHECK(in_components == d.a_disks.size());
        if (inv.closed) {
            CHECK(d.chi_a_prime == 2 * static_cast<std::int64_t>(d.a_prime_components) - static_cast<std::int64_t>(d.a_prime_boundary));
            CHECK(d.a_prime_boundary == d.b_prime_boundary);
        }
    }
}
