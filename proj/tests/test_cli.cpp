#include "oracles.hpp"

#include "nsurf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = nsurf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("validate")
{
    const auto r = run({"validate", oracle::fixture("ball1.tri"), "--human"});
    CHECK(r.code == 0);
    CHECK(r.out == "valid, 1 tetrahedron, 4 boundary faces\n");
    const auto j = nlohmann::json::parse(run({"validate", oracle::fixture("ball1.tri")}).out);
    CHECK(j["message"] == "valid, 1 tetrahedron, 4 boundary faces");
    CHECK(j["valid"] == true);
}

TEST_CASE("verify the doubled tetrahedron")
{
    const auto r = run({"verify", oracle::fixture("s3_double.tri"), "--max-coord", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["violations"].empty());
    CHECK(j["hard_failures"] == 0);
    CHECK(j["triangulation"]["N_convention"] == "corner-multiplicity");
}

TEST_CASE("analyze the two-quad sphere")
{
    const auto r = run({"analyze", oracle::fixture("s3_double.tri"), "--vector", "0 0 0 0 1 0 0  0 0 0 0 1 0 0"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["chi"] == 2);
    CHECK(j["counts"]["quads"] == 2);
    CHECK(j["counts"]["triangles"] == 0);
    REQUIRE(j["components"].size() == 1);
    CHECK(j["components"][0]["surface"] == "sphere");
}

TEST_CASE("vector from a file")
{
    const auto path = std::string(NSURF_SOURCE_DIR) + "/tests/data/two_quad_sphere.vec";
    const auto r = run({"analyze", oracle::fixture("s3_double.tri"), "--vector-file", path, "--human"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sphere") != std::string::npos);
}

TEST_CASE("enumerate")
{
    const auto r = run({"enumerate", oracle::fixture("s3_double.tri")});
    CHECK(r.code == 0);
    const auto count = run({"enumerate", oracle::fixture("s3_double.tri"), "--count-only"});
    std::size_t lines = 0;
    for (char ch : r.out)
        lines += ch == '\n';
    CHECK(count.out == std::to_string(lines) + "\n");
    const auto par = run({"enumerate", oracle::fixture("s3_double.tri"), "--jobs", "3", "--max-coord", "2"});
    const auto ser = run({"enumerate", oracle::fixture("s3_double.tri"), "--max-coord", "2"});
    CHECK(par.out == ser.out);
}

TEST_CASE("other subcommands")
{
    CHECK(run({"skeleton", oracle::fixture("l92.tri")}).code == 0);
    CHECK(run({"skeleton", oracle::fixture("l92.tri"), "--human"}).code == 0);
    CHECK(run({"equations", oracle::fixture("s3_double.tri"), "--human"}).code == 0);
    const auto eq = nlohmann::json::parse(run({"equations", oracle::fixture("s3_double.tri")}).out);
    CHECK(eq["rows"] == 12);
    CHECK(run({"build", oracle::fixture("s3_double.tri"), "--vector", "1 0 0 0 0 0 0 1 0 0 0 0 0 0"}).code == 0);
    const auto link = run({"vertex-link", oracle::fixture("s3_double.tri"), "--vertex", "1"});
    CHECK(link.code == 0);
    CHECK(nlohmann::json::parse(link.out)["vector"] == "0 1 0 0 0 0 0 0 1 0 0 0 0 0");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"analyze", oracle::fixture("s3_double.tri")}).code == 2);
    CHECK(run({"enumerate", oracle::fixture("s3_double.tri"), "--max-coord", "zero"}).code == 2);
    CHECK(run({"enumerate", oracle::fixture("s3_double.tri"), "--max-coord", "0"}).code == 2);
    const auto r = run({"verify"});
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data errors exit with 1")
{
    CHECK(run({"validate", oracle::fixture("missing.tri")}).code == 1);
    const auto bad = run({"analyze", oracle::fixture("s3_double.tri"), "--vector", "1 0 0 0 0 0 0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("expected 14") != std::string::npos);
    CHECK(run({"analyze", oracle::fixture("s3_double.tri"), "--vector", "1 0 0 0 0 0 0 0 0 0 0 0 0 0"}).code == 1);
    CHECK(run({"build", oracle::fixture("s3_double.tri"), "--vector", "0 0 0 0 1 1 0 0 0 0 0 0 0 0"}).code == 1);
    CHECK(run({"vertex-link", oracle::fixture("s3_double.tri"), "--vertex", "9"}).code == 1);
    CHECK(run({"verify", oracle::fixture("l92.tri"), "--max-coord", "60"}).code == 1);
}

TEST_CASE("verify output is byte-identical across runs and job counts")
{
    const auto a = run({"verify", oracle::fixture("rp3.tri"), "--max-coord", "2"});
    const auto b = run({"verify", oracle::fixture("rp3.tri"), "--max-coord", "2"});
    const auto c = run({"verify", oracle::fixture("rp3.tri"), "--max-coord", "2", "--jobs", "4"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == b.code);
}

TEST_CASE("skeleton reports vertex links")
{
    const auto j = nlohmann::json::parse(run({"skeleton", oracle::fixture("l92.tri")}).out);
    REQUIRE(j["vertices"].size() == 1);
    CHECK(j["vertices"][0]["link"] == "sphere");
    CHECK(j["vertices"][0]["link_manifold"] == true);
    const auto ball = nlohmann::json::parse(run({"skeleton", oracle::fixture("ball1.tri")}).out);
    for (const auto& v : ball["vertices"])
        CHECK(v["link"] == "disk");
}
