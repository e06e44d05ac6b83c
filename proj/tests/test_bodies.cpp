#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/bodies.hpp"
#include "sphereval/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace sphereval;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

namespace {

Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

Vec random_unit(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    Vec v(n);
    for (int d = 0; d < n; ++d) v[d] = N(rng);
    return v.normalized();
}

} // namespace

TEST_CASE("support function examples") {
    const ConvexBody Q = ConvexBody::unit_cube(3);
    CHECK(support(Q, v3(1, 0, 0)) == Approx(1.0));
    CHECK(support(Q, v3(-1, 0, 0)) == Approx(0.0));
    std::mt19937_64 rng(1);
    const ConvexBody B = ConvexBody::ball(3, 2.0);
    for (int m = 0; m < 5; ++m) CHECK(support(B, random_unit(3, rng)) == Approx(2.0));
    CHECK(support(ConvexBody::ball_sum(Q, 0.5), v3(1, 0, 0)) == Approx(1.5));
    CHECK_THROWS_AS(support(Q, v3(1, 1, 0)), DomainError);
}

TEST_CASE("support of other body classes") {
    const ConvexBody sc = ConvexBody::subspace_cube(3, 2);
    CHECK(support(sc, v3(1, 0, 0)) == Approx(0.5));
    CHECK(support(sc, v3(0, 0, 1)) == Approx(0.0));
    const ConvexBody z = ConvexBody::zonal_smooth(make_zonal(3, {1.0}));
    CHECK(support(z, v3(0, 1, 0)) == Approx(1.0));
    CHECK_THROWS_AS(ConvexBody::zonal_smooth(expand_zonal(3, [](double t) { return t * t; }, 4)), DomainError);
}

TEST_CASE("area measures") {
    const AreaMeasure S2 = area_measure(ConvexBody::unit_cube(3), 2);
    const auto* atoms = std::get_if<AtomicMeasure>(&S2.v);
    REQUIRE(atoms);
    CHECK(atoms->normals.size() == 6);
    for (double m : atoms->masses) CHECK(m == Approx(1.0));
    CHECK(S2.total_mass() == Approx(6.0));
    CHECK(S2.centroid().norm() < 1e-12);

    const AreaMeasure B1 = area_measure(ConvexBody::ball(3, 1.0), 1);
    REQUIRE(std::get_if<UniformSphereMeasure>(&B1.v));
    CHECK(B1.total_mass() == Approx(4.0 * pi));

    std::vector<Vec> seg{v3(0, 0, 0), v3(2, 0, 0)};
    const AreaMeasure L1 = area_measure(ConvexBody::polytope(seg), 1);
    CHECK(L1.total_mass() == Approx(2.0 * pi));
    // mass sits on the great circle orthogonal to the segment
    auto abs_x = [](double t) { return std::abs(t); };
    CHECK(pair(L1, abs_x, v3(1, 0, 0)) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("area measure capability limits") {
    CHECK_THROWS_AS(area_measure(ConvexBody::unit_cube(4), 2), CapabilityError);
    CHECK_THROWS_AS(area_measure(ConvexBody::unit_cube(3), 3), DomainError);
}

TEST_CASE("projection volume") {
    const ConvexBody Q = ConvexBody::unit_cube(3);
    CHECK(projection_volume(Q, v3(1, 0, 0)) == Approx(1.0));
    const Vec d = v3(1, 1, 1).normalized();
    CHECK(projection_volume(Q, d) == Approx(std::sqrt(3.0)));
    std::mt19937_64 rng(2);
    std::vector<Vec> pts;
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int m = 0; m < 10; ++m) {
        const Vec p = v3(U(rng), U(rng), U(rng));
        pts.push_back(p);
        pts.push_back(-p);
    }
    const ConvexBody P = ConvexBody::polytope(pts);
    for (int m = 0; m < 5; ++m) {
        const Vec u = random_unit(3, rng);
        CHECK(projection_volume(P, u) == Approx(projection_volume(P, -u)).epsilon(1e-12));
    }
}

TEST_CASE("hull helpers") {
    std::vector<Vec> tet{v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(0.1, 0.1, 0.1)};
    CHECK(hull_volume(tet, 1e-9) == Approx(1.0 / 6.0));
    CHECK(hull_facets(tet, 1e-9).size() == 4);
    const auto g = analyze_polytope(tet);
    CHECK(g->dim == 3);
    CHECK(g->volume == Approx(1.0 / 6.0));
}

TEST_CASE("is_support_function") {
    const auto ball = is_support_function(make_zonal(3, {1.0}));
    CHECK(ball.ok);
    CHECK(ball.margin == Approx(1.0).epsilon(1e-6));
    const auto sq = is_support_function(expand_zonal(3, [](double t) { return t * t; }, 4));
    CHECK_FALSE(sq.ok);
    CHECK(sq.margin < -0.5);
    const auto ab = is_support_function(expand_zonal(3, [](double t) { return std::abs(t); }, 32));
    CHECK(ab.ok);
}

TEST_CASE("truncated series are checked after Poisson smoothing") {
    ZonalProfile ab = expand_zonal(3, [](double t) { return std::abs(t); }, 32);
    ab.exact = nullptr;
    const auto sm = is_support_function(ab);
    CHECK(sm.ok);
    CHECK(sm.band_warning);
    CHECK(sm.smoothing == Approx(std::pow(1e-3, 1.0 / 32)));
    SupportCheckOptions raw;
    raw.smoothing_tail = 0.0;
    CHECK_FALSE(is_support_function(ab, raw).ok);
    ZonalProfile sq = expand_zonal(3, [](double t) { return t * t; }, 32);
    sq.exact = nullptr;
    CHECK(is_support_function(sq).smoothing == 1.0);
    CHECK_FALSE(is_support_function(sq).ok);
}

TEST_CASE("steiner combination") {
    const ConvexBody S = ConvexBody::ball_sum(ConvexBody::unit_cube(3), 0.5);
    // S_2(K + tB) total mass: surface area of the rounded cube
    CHECK(area_measure(S, 2).total_mass() == Approx(6.0 + 6.0 * pi * 0.5 + 4.0 * pi * 0.25));
    CHECK(S.dim() == 3);
}
