#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/errors.hpp"
#include "sphereval/specfun.hpp"

#include <boost/math/special_functions/gegenbauer.hpp>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace sphereval;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

TEST_CASE("kappa") {
    CHECK(kappa(0) == Approx(1.0).epsilon(1e-15));
    CHECK(kappa(1) == Approx(2.0).epsilon(1e-15));
    CHECK(kappa(2) == Approx(pi).epsilon(1e-15));
    CHECK(kappa(3) == Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(kappa(-1), DomainError);
    CHECK(sphere_area(2) == Approx(4.0 * pi).epsilon(1e-15));
}

TEST_CASE("kappa_ext continues through Gamma") {
    CHECK(kappa_ext(3) == kappa(3));
    CHECK(kappa_ext(-1) == Approx(1.0 / pi).epsilon(1e-14));
    CHECK(kappa_ext(-2) == 0.0);
    CHECK(kappa_ext(-4) == 0.0);
    // π^{-3/2}/Γ(-1/2)
    CHECK(kappa_ext(-3) == Approx(std::pow(pi, -1.5) / std::tgamma(-0.5)).epsilon(1e-14));
}

TEST_CASE("legendre_nd examples") {
    CHECK(legendre_nd(3, 0, 0.37) == 1.0);
    for (double t : {-1.0, -0.3, 0.0, 0.6, 1.0}) CHECK(legendre_nd(3, 2, t) == Approx(0.5 * (3 * t * t - 1)).epsilon(1e-15));
    CHECK(legendre_nd(4, 1, 0.5) == Approx(0.5));
    for (int n = 3; n <= 7; ++n)
        for (int k = 0; k <= 64; k += 7) CHECK(legendre_nd(n, k, 1.0) == Approx(1.0).epsilon(1e-13));
}

TEST_CASE("legendre_nd agrees with normalized Gegenbauer up to k = 64") {
    double worst = 0.0;
    for (int n = 3; n <= 6; ++n) {
        const double lam = 0.5 * (n - 2);
        for (int k = 0; k <= 64; ++k)
            for (double t = -1.0; t <= 1.0; t += 0.0625) {
                const double ref = boost::math::gegenbauer(unsigned(k), lam, t) / boost::math::gegenbauer(unsigned(k), lam, 1.0);
                worst = std::max(worst, std::abs(legendre_nd(n, k, t) - ref));
            }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("legendre_nd rejects bad input") {
    CHECK_THROWS_AS(legendre_nd(2, 1, 0.0), DomainError);
    CHECK_THROWS_AS(legendre_nd(3, -1, 0.0), DomainError);
    CHECK_THROWS_AS(legendre_nd(3, 1, 1.5), DomainError);
}

TEST_CASE("zonal_basis_all matches legendre_nd") {
    const auto v = zonal_basis_all(5, 20, 0.3);
    REQUIRE(v.size() == 21);
    for (int k = 0; k <= 20; ++k) CHECK(v[k] == Approx(legendre_nd(5, k, 0.3)).epsilon(1e-14));
    // n = 2 gives Chebyshev polynomials
    CHECK(zonal_basis_all(2, 6, 0.4)[6] == Approx(std::cos(6 * std::acos(0.4))).epsilon(1e-13));
}

TEST_CASE("Gauss-Jacobi rules") {
    const auto r2 = gauss_jacobi(0.0, 2);
    REQUIRE(r2.size() == 2);
    CHECK(std::abs(r2.nodes[0]) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == Approx(1.0).epsilon(1e-14));
    for (int m : {1, 5, 17, 40}) {
        const auto r = gauss_jacobi(0.0, m);
        CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == Approx(2.0).epsilon(1e-13));
    }
    const auto c = gauss_jacobi(-0.5, 60);
    CHECK(std::accumulate(c.weights.begin(), c.weights.end(), 0.0) == Approx(pi).epsilon(1e-13));
    // exact for degree 2m-1 with an asymmetric weight: ∫(1-t)(1+t)^2 t^2 dt = 8/15 - 8/15 + ... computed by hand as 16/15 - 4/5 = 4/15
    const auto a = gauss_jacobi(1.0, 2.0, 3);
    double s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) s += a.weights[q] * a.nodes[q] * a.nodes[q];
    CHECK(s == Approx(4.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("gauss_legendre on an interval") {
    const auto r = gauss_legendre(8, 0.0, 2.0);
    double s = 0.0;
    for (std::size_t q = 0; q < r.size(); ++q) s += r.weights[q] * std::pow(r.nodes[q], 7);
    CHECK(s == Approx(32.0).epsilon(1e-13));
}

TEST_CASE("sphere_rule is a probability rule") {
    for (int n = 3; n <= 6; ++n) {
        const auto r = sphere_rule(n, 64);
        CHECK(std::accumulate(r->weights.begin(), r->weights.end(), 0.0) == Approx(1.0).epsilon(1e-14));
        const auto e = sphere_rule_exact(n, 20);
        CHECK(std::accumulate(e->weights.begin(), e->weights.end(), 0.0) == Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("funk_hecke examples") {
    auto one = [](double) { return 1.0; };
    auto abs = [](double t) { return std::abs(t); };
    CHECK(funk_hecke(3, 0, one) == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(funk_hecke(3, 1, abs)) < 1e-15);
    CHECK(funk_hecke(3, 2, abs) == Approx(0.125).epsilon(1e-13));
    CHECK(funk_hecke(3, 0, abs) == Approx(0.5).epsilon(1e-13));
    const auto all = funk_hecke_all(4, 6, abs);
    CHECK(all.size() == 7);
    CHECK(all[2] == Approx(funk_hecke(4, 2, abs)).epsilon(1e-14));
}

TEST_CASE("funk_hecke self-check flags unresolved kernels") {
    auto wild = [](double t) { return std::sin(400.0 * t); };
    FunkHeckeOptions o;
    o.points = 16;
    CHECK_THROWS_AS(funk_hecke(3, 1, wild, o), QuadratureError);
}
