#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/constants.hpp"
#include "sphereval/errors.hpp"
#include "sphereval/mval.hpp"

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

ValuationRep random_even(int n, int i, int K, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> a(K + 1, 0.0);
    for (int k = 0; k <= K; k += 2) a[k] = U(rng) / (1.0 + k * k);
    return ValuationRep::from_generating(i, make_zonal(n, a));
}

} // namespace

TEST_CASE("representation names") {
    for (RepKind k : {RepKind::Generating, RepKind::Crofton, RepKind::Klain}) CHECK(rep_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(rep_from_string("fourier"), DomainError);
}

TEST_CASE("builtins") {
    const auto pi2 = builtin(Builtin::Pi, 3, 2);
    CHECK(pi2.i == 2);
    CHECK(pi2.generating.coeffs[0] == Approx(0.25).epsilon(1e-12));
    CHECK(pi2.generating.coeffs[2] == Approx(5.0 / 16.0).epsilon(1e-12));
    CHECK(q_ni(4, 3) == Approx(2.0 / pi).epsilon(1e-14));
    const auto J = builtin("SteinerJ", 3);
    CHECK(J.i == 1);
    CHECK(J.generating.coeffs[1] == 0.0);
    const auto ms = builtin("MeanSection_3", 4);
    CHECK(ms.i == 2);
    CHECK(detect_parity(ms.generating.coeffs, 1e-14) == Parity::Even);
    const auto mf = builtin("MeanSectionFull_3", 4);
    CHECK(mf.generating.coeffs[1] == 0.0);
    CHECK(builtin("Pi_2", 4).i == 2);
    CHECK_THROWS_AS(builtin("Pi_4", 4), DomainError);
    CHECK_THROWS_AS(builtin("Zeta_2", 4), DomainError);
}

TEST_CASE("evaluate Pi_2 is the projection volume") {
    const auto pi2 = builtin(Builtin::Pi, 3, 2);
    const ConvexBody Q = ConvexBody::unit_cube(3);
    CHECK(evaluate(pi2, Q, v3(1, 1, 1).normalized()) == Approx(std::sqrt(3.0)).epsilon(1e-12));
    std::mt19937_64 rng(3);
    for (int m = 0; m < 10; ++m) {
        const Vec u = random_unit(3, rng);
        CHECK(evaluate(pi2, Q, u) == Approx(projection_volume(Q, u)).epsilon(1e-12));
    }
}

TEST_CASE("Pi_i on a ball is constant and even valuations are even") {
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            const auto p = builtin(Builtin::Pi, n, i);
            const ConvexBody B = ConvexBody::ball(n, 1.0);
            const double h0 = evaluate(p, B, random_unit(n, rng));
            for (int m = 0; m < 3; ++m) CHECK(evaluate(p, B, random_unit(n, rng)) == Approx(h0).epsilon(1e-10));
        }
    const auto v = random_even(3, 2, 8, rng);
    std::vector<Vec> pts{v3(0, 0, 0), v3(1, 0, 0), v3(0, 2, 0), v3(0, 0, 1), v3(1, 1, 1)};
    std::vector<Vec> neg;
    for (const auto& p : pts) neg.push_back(-p);
    const ConvexBody P = ConvexBody::polytope(pts), Pn = ConvexBody::polytope(neg);
    const Vec u = random_unit(3, rng);
    CHECK(evaluate(v, P, u) == Approx(evaluate(v, Pn, u)).epsilon(1e-10));
}

TEST_CASE("conversions of zero are zero") {
    const auto z = ValuationRep::from_generating(2, make_zonal(4, std::vector<double>(9, 0.0)));
    for (RepKind k : {RepKind::Crofton, RepKind::Klain, RepKind::Generating})
        for (double c : convert(z, k).grass.coeffs) CHECK(c == 0.0);
    const auto back = to_generating(to_crofton(z));
    for (double c : back.generating.coeffs) CHECK(c == 0.0);
}

TEST_CASE("crofton round trip") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            const auto v = random_even(n, i, 16, rng);
            const auto c = to_crofton(v);
            CHECK(c.kind == RepKind::Crofton);
            CHECK(c.grass.side == Side::Grassmannian);
            const auto back = to_generating(c);
            CHECK(coeff_distance(back.generating.coeffs, v.generating.coeffs) < 1e-7);
        }
}

TEST_CASE("odd generating functions have no Crofton form") {
    const auto v = ValuationRep::from_generating(1, make_zonal(3, {0.0, 1.0}));
    CHECK_THROWS_AS(to_crofton(v), DomainError);
}

TEST_CASE("degree one: Box of the generating function is the Crofton density") {
    // i = 1: h(Φ K, ·) = h(K, ·) ∗ f with □_n ğ = f
    std::mt19937_64 rng(12);
    const int n = 4;
    const auto v = random_even(n, 1, 12, rng);
    const auto c = to_crofton(v);
    const double scale = c.grass.coeffs[0] / v.generating.coeffs[0];
    for (int k = 1; 2 * k <= 12; ++k)
        CHECK(c.grass.coeffs[k] ==
              Approx(scale * box_multiplier(n, 2 * k) * v.generating.coeffs[2 * k]).epsilon(1e-8));
}

TEST_CASE("constant generating function gives a constant Klain profile") {
    for (int n = 3; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            const auto v = ValuationRep::from_generating(i, make_zonal(n, {1.5}));
            const auto k = to_klain(v);
            CHECK(k.grass.side == Side::Sphere);
            CHECK(k.grass.coeffs[0] == Approx(1.5 * subspace_mass(n, i)).epsilon(1e-12));
            for (std::size_t m = 1; m < k.grass.coeffs.size(); ++m) CHECK(std::abs(k.grass.coeffs[m]) < 1e-12);
            const auto d = klain_body_direct(v);
            CHECK(d.coeffs[0] == Approx(1.5 * subspace_mass(n, i)).epsilon(1e-10));
        }
}

TEST_CASE("Klain body of a degree n-1 valuation is twice the generating body") {
    const int n = 4;
    const ZonalProfile g = make_zonal(n, {1.0, 0.0, 0.1, 0.0, -0.02});
    const auto v = ValuationRep::from_generating(n - 1, g);
    const auto k = to_klain(v);
    for (double r : {0.0, 0.3, 0.8, 1.0})
        CHECK(eval_grass(k.grass, r) == Approx(2.0 * eval_zonal(g, std::sqrt(1 - r * r))).epsilon(1e-9));
}

TEST_CASE("Klain body of Pi_i is a ball in the orthogonal complement") {
    for (int n = 3; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            const auto k = to_klain(builtin(Builtin::Pi, n, i));
            const double rho = projection_klain_radius(n, i);
            for (double r : {0.0, 0.25, 0.6, 0.9})
                CHECK(eval_grass_kernel(k.grass, r) == Approx(rho * std::sqrt(1 - r * r)).epsilon(1e-6));
            const auto direct = klain_body_direct(builtin(Builtin::Pi, n, i));
            CHECK(coeff_distance(direct.coeffs, k.grass.coeffs) < 1e-6);
            CHECK(is_support_function(k.grass).ok);
        }
}

TEST_CASE("triangle generating -> crofton -> klain") {
    std::mt19937_64 rng(13);
    const auto v = random_even(4, 2, 12, rng);
    const auto a = to_klain(to_crofton(v));
    const auto b = klain_body_direct(v);
    CHECK(coeff_distance(a.grass.coeffs, b.coeffs) < 1e-6);
    const auto c = to_generating(a);
    CHECK(coeff_distance(c.generating.coeffs, v.generating.coeffs) < 1e-7);
}

TEST_CASE("combine requires matching shapes") {
    const auto a = builtin(Builtin::Pi, 3, 1);
    const auto b = builtin(Builtin::Pi, 3, 2);
    CHECK_THROWS_AS(combine(1.0, a, 1.0, b), DegreeError);
    const auto s = combine(2.0, a, -1.0, a);
    CHECK(coeff_distance(s.generating.coeffs, a.generating.coeffs) < 1e-15);
}

TEST_CASE("degree checks") {
    CHECK_THROWS_AS(ValuationRep::from_generating(0, make_zonal(3, {1.0})), DegreeError);
    CHECK_THROWS_AS(ValuationRep::from_generating(3, make_zonal(3, {1.0})), DegreeError);
}
