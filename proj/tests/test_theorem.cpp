#include "oracles.hpp"

#include "nsurf/theorem.hpp"

#include <doctest.h>

using namespace nsurf;

namespace {

struct Fixture {
    Triangulation tri;
    Skeleton skel;
    MatchingSystem m;

    explicit Fixture(const std::string& name)
        : tri(load_triangulation(oracle::fixture(name))), skel(compute_skeleton(tri)), m(build_matching_system(tri, skel))
    {
    }

    TheoremReport analyze(const std::string& v) const { return analyze_surface(tri, skel, m, parse_normal_vector(v)); }
};

CheckStatus status(const TheoremReport& r, const std::string& name)
{
    const auto* c = r.check(name);
    REQUIRE(c != nullptr);
    return c->status;
}

} // namespace

TEST_CASE("theorem 1 examples")
{
    const Fixture s3("s3_double.tri");
    SUBCASE("vertex-linking sphere is the equality case")
    {
        const auto r = s3.analyze("1 0 0 0 0 0 0  1 0 0 0 0 0 0");
        CHECK(r.theorem1.holds);
        CHECK(r.theorem1.margin == 0);
        CHECK(status(r, "vertex_link_equality") == CheckStatus::Pass);
        CHECK(status(r, "vertex_link_remark") == CheckStatus::Pass);
    }
    SUBCASE("two-quad sphere")
    {
        const auto r = s3.analyze("0 0 0 0 1 0 0  0 0 0 0 1 0 0");
        CHECK(r.theorem1.holds);
        CHECK(r.theorem1.margin == 14);
        CHECK(r.theorem1.genus_applicable);
        CHECK(r.theorem1.genus_holds);
        CHECK(r.theorem1.genus_margin == 14);
    }
    SUBCASE("single quad disk is bounded")
    {
        const Fixture ball("ball1.tri");
        const auto r = ball.analyze("0 0 0 0 1 0 0");
        CHECK(r.theorem1.holds);
        CHECK(r.theorem1.margin == 6);
        CHECK_FALSE(r.theorem1.closed_surface);
        CHECK_FALSE(r.theorem1.genus_applicable);
    }
    SUBCASE("boundary vertex link is reported with a caveat")
    {
        const Fixture ball("ball1.tri");
        const auto r = ball.analyze("1 0 0 0 0 0 0");
        CHECK_FALSE(r.theorem1.holds);
        CHECK(r.theorem1.margin == -1);
        CHECK(status(r, "theorem1") == CheckStatus::Caveat);
        CHECK_FALSE(r.hard_failure());
    }
    SUBCASE("empty surface is vacuous")
    {
        const auto r = s3.analyze("0 0 0 0 0 0 0  0 0 0 0 0 0 0");
        CHECK(r.theorem1.vacuous);
        CHECK(status(r, "theorem1") == CheckStatus::NotApplicable);
    }
}

TEST_CASE("theorem 2 examples")
{
    const Fixture s3("s3_double.tri");
    const auto link = s3.analyze("1 0 0 0 0 0 0  1 0 0 0 0 0 0");
    CHECK_FALSE(link.theorem2.applicable);
    CHECK(status(link, "theorem2") == CheckStatus::NotApplicable);

    const auto quads = s3.analyze("0 0 0 0 1 0 0  0 0 0 0 1 0 0");
    CHECK(quads.theorem2.applicable);
    CHECK(quads.theorem2.holds);
    CHECK(quads.theorem2.margin == 16);
    CHECK(quads.max_degree == 2);
}

TEST_CASE("report fields for the two-quad sphere")
{
    const Fixture s3("s3_double.tri");
    const auto r = s3.analyze("0 0 0 0 1 0 0  0 0 0 0 1 0 0");
    REQUIRE(r.built);
    CHECK(r.closed_manifold);
    CHECK(r.closed_surface);
    CHECK(r.nonempty);
    REQUIRE(r.decomposition);
    CHECK(r.decomposition->weight.weight_b == 8);
    REQUIRE(r.gamma);
    CHECK(r.gamma->q_degree_total() == 8);
    for (const auto& c : r.checks)
        CHECK(c.status != CheckStatus::Fail);
    CHECK(r.checks.size() == check_names().size());
}

TEST_CASE("batch on the 3-ball has caveats but no hard failures")
{
    const Fixture ball("ball1.tri");
    EnumerationConfig cfg;
    const auto s = verify_batch(ball.tri, ball.skel, cfg);
    CHECK(s.surfaces > 0);
    CHECK(s.hard_failures() == 0);
    CHECK_FALSE(s.caveats.empty());
    CHECK_FALSE(s.closed_manifold);
}

TEST_CASE("batch on the doubled tetrahedron")
{
    const Fixture s3("s3_double.tri");
    EnumerationConfig cfg;
    cfg.max_coordinate = 2;
    const auto s = verify_batch(s3.tri, s3.skel, cfg);
    CHECK(s.hard_failures() == 0);
    CHECK(s.tallies.at("theorem1").fail == 0);
    CHECK(s.tallies.at("theorem2").fail == 0);
    CHECK(s.tallies.at("theorem1").pass == s.surfaces);
    CHECK(s.build_failures.empty());
    REQUIRE(s.min_theorem1_margin);
    CHECK(*s.min_theorem1_margin == 0);
}

TEST_CASE("empty enumeration is vacuous")
{
    // only the zero vector solves this system within the bound
    const auto tri = parse_triangulation("1\n0 1 032\n0 0 132\nbdry\nbdry\n");
    const auto skel = compute_skeleton(tri);
    EnumerationConfig cfg;
    cfg.max_coordinate = 1;
    const auto m = build_matching_system(tri, skel);
    const std::vector<TheoremReport> none;
    const auto s = summarize(tri, skel, cfg, none);
    CHECK(s.vacuous());
    CHECK(s.surfaces == 0);
    CHECK(s.hard_failures() == 0);

    const std::vector<TheoremReport> only_zero{analyze_surface(tri, skel, m, NormalVector(1))};
    const auto z = summarize(tri, skel, cfg, only_zero);
    CHECK(z.vacuous());
    CHECK(z.zero_vectors == 1);
}

TEST_CASE("build failures are counted separately")
{
    const auto tri = parse_triangulation("1\n0 1 032\n0 0 132\nbdry\nbdry\n");
    const auto skel = compute_skeleton(tri);
    EnumerationConfig cfg;
    const auto s = verify_batch(tri, skel, cfg);
    CHECK_FALSE(s.build_failures.empty());
    CHECK(s.hard_failures() == 0);
    CHECK(s.built + s.build_failures.size() == s.surfaces);
}

TEST_CASE("parallel verification gives the same summary")
{
    const Fixture f("rp3.tri");
    EnumerationConfig cfg;
    cfg.max_coordinate = 2;
    const auto a = verify_batch(f.tri, f.skel, cfg);
    cfg.jobs = 4;
    const auto b = verify_batch(f.tri, f.skel, cfg);
    CHECK(a.surfaces == b.surfaces);
    CHECK(a.min_theorem1_margin == b.min_theorem1_margin);
    CHECK(a.min_theorem2_margin == b.min_theorem2_margin);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i)
        CHECK(a.violations[i].vector == b.violations[i].vector);
    for (const auto& name : check_names())
        CHECK(a.tallies.at(name).pass == b.tallies.at(name).pass);
}
