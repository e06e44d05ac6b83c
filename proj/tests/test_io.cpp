#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/errors.hpp"
#include "sphereval/io.hpp"

#include <filesystem>
#include <random>

using namespace sphereval;

namespace {

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST_CASE("zonal profile round trip is exact") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> a;
    for (int k = 0; k <= 20; ++k) a.push_back(U(rng) * std::pow(10.0, -k));
    const ZonalProfile p = make_zonal(4, a);
    const auto path = temp_path("sphereval_zonal.json");
    write_json_file(path, to_json(p));
    const ZonalProfile q = zonal_from_json(read_json_file(path));
    CHECK(q.n == 4);
    CHECK(q.coeffs == p.coeffs);
    CHECK(q.parity == p.parity);
    std::filesystem::remove(path);
}

TEST_CASE("grass profile round trip is exact") {
    GrassProfile p;
    p.n = 5;
    p.i = 2;
    p.side = Side::Sphere;
    p.coeffs = {0.1, 1.0 / 3.0, -2.0e-17};
    const Json j = to_json(p);
    CHECK(j.at("space") == "sphere");
    const GrassProfile q = grass_from_json(Json::parse(j.dump()));
    CHECK(q.coeffs == p.coeffs);
    CHECK(q.side == Side::Sphere);
    CHECK(q.i == 2);
}

TEST_CASE("valuation JSON") {
    const auto v = builtin(Builtin::Pi, 4, 2);
    const Json j = to_json(v);
    CHECK(j.at("rep") == "generating");
    const auto w = valuation_from_json(j, RepKind::Generating);
    CHECK(w.i == 2);
    CHECK(w.generating.coeffs == v.generating.coeffs);
    CHECK_THROWS_AS(valuation_from_json(j, RepKind::Klain), DomainError);

    Json bare = to_json(v.generating);
    CHECK(bare.at("i").is_null());
    CHECK_THROWS_AS(valuation_from_json(bare, RepKind::Generating), DomainError);
    CHECK(valuation_from_json(bare, RepKind::Generating, 2).i == 2);

    const auto k = to_klain(v);
    const auto k2 = valuation_from_json(Json::parse(to_json(k).dump()), RepKind::Klain);
    CHECK(k2.grass.coeffs == k.grass.coeffs);
}

TEST_CASE("malformed profiles are rejected") {
    CHECK_THROWS_AS(zonal_from_json(Json{{"n", 3}}), DomainError);
    CHECK_THROWS_AS(zonal_from_json(Json{{"n", 2}, {"coeffs", {1.0}}}), DomainError);
    CHECK_THROWS_AS(zonal_from_json(Json{{"n", 3}, {"parity", "even"}, {"coeffs", {1.0, 0.5}}}), DomainError);
    CHECK_THROWS_AS(grass_from_json(Json{{"n", 4}, {"i", 4}, {"space", "grassmannian"}, {"coeffs", {1.0}}}), DomainError);
    CHECK_THROWS_AS(read_json_file(temp_path("sphereval_missing_file.json")), DomainError);
}

TEST_CASE("vertex lists") {
    const Json arr = Json::parse("[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]");
    CHECK(vertices_from_json(arr).size() == 4);
    const Json obj = {{"vertices", arr}};
    CHECK(vertices_from_json(obj)[1][0] == 1.0);
    CHECK_THROWS_AS(vertices_from_json(Json::parse("[[0,0],[1,0,0]]")), DomainError);
}
