#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/constants.hpp"
#include "sphereval/errors.hpp"
#include "sphereval/transforms.hpp"

#include <cmath>
#include <random>

using namespace sphereval;
using doctest::Approx;

namespace {

GrassProfile random_grass(int n, int i, int kh, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    GrassProfile p;
    p.n = n;
    p.i = i;
    for (int k = 0; k <= kh; ++k) p.coeffs.push_back(U(rng) / (1 + k * k));
    return p;
}

} // namespace

TEST_CASE("cosine multipliers") {
    CHECK(cosine_multiplier(3, 1, 0) == Approx(0.5).epsilon(1e-14));
    CHECK(cosine_multiplier(3, 1, 2) == Approx(0.125).epsilon(1e-14));
    for (int k = 0; k <= 16; k += 2) CHECK(cosine_multiplier(3, 2, k) == Approx(cosine_multiplier(3, 1, k)).epsilon(1e-14));
    CHECK(cosine_scale(3, 2) == Approx(1.0).epsilon(1e-15));
    const auto m = multipliers(TransformTag::cosine(1), 3, 4);
    CHECK(m.even_only);
    CHECK(m.values[2] == Approx(0.125));
    CHECK_THROWS_AS(multipliers(TransformTag::cosine(0), 3, 4), DomainError);
    CHECK_THROWS_AS(multipliers(TransformTag::cosine(3), 3, 4), DomainError);
}

TEST_CASE("box multipliers") {
    CHECK(box_multiplier(3, 0) == 1.0);
    CHECK(box_multiplier(3, 1) == 0.0);
    CHECK(box_multiplier(3, 2) == -2.0);
    const auto m = multipliers(TransformTag::box(3), 3, 3);
    CHECK(m.values[1] == 0.0);
    CHECK_THROWS_AS(multipliers(TransformTag::box(1), 3, 3), DomainError);
    CHECK_THROWS_AS(multipliers(TransformTag::box(4), 3, 3), DomainError);
}

TEST_CASE("Berg multipliers") {
    for (int n = 3; n <= 5; ++n) {
        const auto t = berg_conv_multipliers(n, n, 8);
        CHECK(t.values[0] == Approx(1.0));
        CHECK(t.values[1] == 0.0);
        CHECK(t.values[2] == Approx(1.0 / (1.0 - 2.0 * n / (n - 1.0))).epsilon(1e-14));
    }
    // j < n: BergConv(j) times Box(j) is the identity off degree 1
    const auto b = multipliers(TransformTag::berg_conv(3), 5, 16);
    const auto x = multipliers(TransformTag::box(3), 5, 16);
    for (int k = 0; k <= 16; ++k) {
        if (k == 1) {
            CHECK(b.values[k] == 0.0);
            CHECK(x.values[k] == 0.0);
        } else {
            CHECK(b.values[k] * x.values[k] == Approx(1.0).epsilon(1e-12));
        }
    }
    for (int k = 0; k <= 8; ++k)
        if (k != 1) CHECK(berg_conv_multiplier(5, 5, k) * box_multiplier(5, k) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Berg truncation is reported") {
    CHECK_THROWS_AS(berg_conv_multipliers(3, 2, 2), TruncationError);
    TransformOptions o;
    o.berg_terms = 1024;
    CHECK_NOTHROW(berg_conv_multipliers(3, 2, 2, o));
    CHECK_THROWS_AS(berg_conv_multipliers(3, 4, 4), DomainError);
}

TEST_CASE("berg_zeta profile") {
    const auto z = berg_zeta(3, 32);
    CHECK(z.n == 3);
    CHECK(z.coeffs[1] == 0.0);
    CHECK(z.abel == Approx(0.995));
    REQUIRE(z.exact);
    // funk_hecke of the profile reproduces 1/box at low degree
    const auto m0 = funk_hecke(3, 0, [&](double t) { return eval_zonal(z, t); });
    CHECK(m0 == Approx(1.0 * z.coeffs[0] / harmonic_dim(3, 0)).epsilon(1e-12));
    CHECK(z.coeffs[2] / harmonic_dim(3, 2) == Approx(1.0 / box_multiplier(3, 2)).epsilon(1e-14));
    CHECK_FALSE(berg_zeta_closed_form(7));
    CHECK_THROWS_AS(berg_zeta(1, 8), DomainError);
}

TEST_CASE("inverse transforms") {
    const auto inv = multipliers(TransformTag::inverse_of(TransformTag::cosine(1)), 3, 16);
    const auto fwd = multipliers(TransformTag::cosine(1), 3, 16);
    for (int k = 0; k <= 16; k += 2) CHECK(inv.values[k] * fwd.values[k] == Approx(1.0).epsilon(1e-13));
    CHECK(inv.condition > 1.0);
    ZonalProfile p = make_zonal(3, {1.0, 0.0, 0.4, 0.0, -0.1});
    const auto there = apply_multiplier(p, multipliers(TransformTag::cosine(1), 3, 4));
    const auto back = apply_multiplier(there, multipliers(TransformTag::inverse_of(TransformTag::cosine(1)), 3, 4));
    CHECK(coeff_distance(back.coeffs, p.coeffs) < 1e-12);
}

TEST_CASE("radon_up and radon_down") {
    std::mt19937_64 rng(3);
    const auto p = random_grass(5, 1, 6, rng);
    const auto up = radon_up(p, 3);
    CHECK(up.i == 3);
    CHECK(up.coeffs == p.coeffs);
    CHECK(radon_up(radon_up(p, 2), 3).coeffs == up.coeffs);
    for (double s : {0.2, 0.7}) {
        double direct = 0.0;
        for (int k = 0; k <= 6; ++k) direct += p.coeffs[k] * grass_basis_q(5, 3, k, s);
        CHECK(eval_grass(up, s) == Approx(direct).epsilon(1e-13));
    }
    const auto down = radon_down(up, 1);
    for (int k = 0; k <= 6; ++k)
        CHECK(down.coeffs[k] == Approx(p.coeffs[k] * grass_norm_sq(5, 3, k) / grass_norm_sq(5, 1, k)).epsilon(1e-13));
    CHECK(down.coeffs[0] == Approx(p.coeffs[0]).epsilon(1e-15));
    CHECK_THROWS_AS(radon_up(p, 1), DomainError);
    CHECK_THROWS_AS(radon_down(p, 2), DomainError);
}

TEST_CASE("radon_down from hyperplanes is the spherical Radon transform") {
    // R_{n-1,1} on degree-2 harmonics of S^3: the great-sphere average of P_2^4 is P_2^4(0) P_2^4
    const double expected = legendre_nd(4, 2, 0.0);
    const auto m = multipliers(TransformTag::radon_down(3, 1), 4, 2);
    CHECK(m.values[2] == Approx(expected * expected).epsilon(1e-13));
}

TEST_CASE("radon_sphere_kernel") {
    const auto one = radon_sphere_kernel(4, 2, make_zonal(4, {1.0}));
    CHECK(one.coeffs[0] == Approx(1.0).epsilon(1e-14));
    const ZonalProfile g = make_zonal(4, {0.5, 0.0, 0.3, 0.0, -0.2, 0.0, 0.1});
    const auto direct = radon_down(zonal_to_hyperplane(g), 2);
    const auto kern = radon_sphere_kernel(4, 2, g);
    CHECK(coeff_distance(direct.coeffs, kern.coeffs) < 1e-10);
    // s = 1 sees g(0) only when i = 1
    const auto k1 = radon_sphere_kernel(4, 1, g);
    CHECK(eval_grass(k1, 1.0) == Approx(eval_zonal(g, 0.0)).epsilon(1e-12));
    const auto d = radon_hyperplane_diag(4, 2, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(kern.coeffs[k] == Approx(d[k] * g.coeffs[2 * k]).epsilon(1e-10));
}

TEST_CASE("commutation defect") {
    std::mt19937_64 rng(9);
    GrassProfile c;
    c.n = 4;
    c.i = 1;
    c.coeffs = {1.7};
    CHECK(commutation_defect(4, 1, 2, c) < 1e-12);
    for (int m = 0; m < 5; ++m) CHECK(commutation_defect(4, 1, 2, random_grass(4, 1, 6, rng)) < 1e-8);
    GrassProfile q;
    q.n = 5;
    q.i = 2;
    q.coeffs = {0.0, 1.0};
    CHECK(commutation_defect(5, 2, 3, q) < 1e-8);
}

TEST_CASE("perp") {
    std::mt19937_64 rng(4);
    GrassProfile c;
    c.n = 5;
    c.i = 2;
    c.coeffs = {2.5};
    const auto pc = perp(c);
    CHECK(pc.i == 3);
    CHECK(pc.coeffs[0] == Approx(2.5));
    const auto p = random_grass(5, 2, 8, rng);
    const auto pp = perp(perp(p));
    CHECK(coeff_distance(pp.coeffs, p.coeffs) < 1e-9);
    for (double s : {0.1, 0.5, 0.95})
        CHECK(eval_grass(perp(p), s) == Approx(eval_grass(p, std::sqrt(1 - s * s))).epsilon(1e-10));
    // perp intertwines R_{i,j} with R_{n-i,n-j}
    const auto lhs = perp(radon_up(p, 3));
    const auto rhs = radon_down(perp(p), 2);
    CHECK(coeff_distance(lhs.coeffs, rhs.coeffs) < 1e-7);
}

TEST_CASE("tag names") {
    CHECK(TransformTag::cosine(2).name().find("Cosine") != std::string::npos);
    CHECK(TransformTag::inverse_of(TransformTag::box(3)).name().find("Box") != std::string::npos);
}
