#include "sphereval/verify.hpp"

#include "oracles.hpp"
#include "sphereval/errors.hpp"
#include "sphereval/lefschetz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

namespace sphereval {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
    double residual = 0.0;
    std::string detail;
};

class Collector {
public:
    Collector(int criterion, std::vector<CheckResult>& out) : c_(criterion), out_(out) {}

    void run(const std::string& name, double tol, const std::function<Outcome()>& body) {
        CheckResult r;
        r.criterion = c_;
        r.check = name;
        r.tolerance = tol;
        try {
            Outcome o = body();
            r.residual = o.residual;
            r.detail = std::move(o.detail);
            r.pass = std::isfinite(o.residual) && o.residual <= tol;
        } catch (const std::exception& e) {
            r.residual = std::numeric_limits<double>::infinity();
            r.detail = e.what();
            r.pass = false;
        }
        out_.push_back(std::move(r));
    }

private:
    int c_;
    std::vector<CheckResult>& out_;
};

Rng make_rng(const VerifyConfig& cfg, int criterion, int stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

double uniform(Rng& rng, double a = -1.0, double b = 1.0) { return std::uniform_real_distribution<double>(a, b)(rng); }

Vec random_direction(int n, Rng& rng) {
    std::normal_distribution<double> normal;
    Vec u(n);
    for (int k = 0; k < n; ++k) u[k] = normal(rng);
    return u / u.norm();
}

ZonalProfile random_even_zonal(int n, int K, Rng& rng) {
    std::vector<double> a(K + 1, 0.0);
    a[0] = 1.0 + uniform(rng, 0.0, 1.0);
    for (int k = 2; k <= K; k += 2) a[k] = uniform(rng) / ((k + 1.0) * (k + 1.0));
    ZonalProfile p = make_zonal(n, std::move(a));
    p.parity = Parity::Even;
    return p;
}

GrassProfile random_grass(int n, int i, int kh, Rng& rng) {
    GrassProfile p;
    p.n = n;
    p.i = i;
    p.coeffs.resize(kh + 1);
    p.coeffs[0] = 1.0 + uniform(rng, 0.0, 1.0);
    for (int k = 1; k <= kh; ++k) p.coeffs[k] = uniform(rng) / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    return p;
}

MvalOptions mval_options(const VerifyConfig& cfg, int K) {
    MvalOptions o;
    o.K = K;
    o.transforms.points = cfg.points;
    return o;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

std::string tag(int n) { return "_n" + std::to_string(n); }
std::string tag(int n, int i) { return tag(n) + "_i" + std::to_string(i); }

double binom_ld(int n, int k) {
    return static_cast<double>(std::tgamma(n + 1.0L) / (std::tgamma(k + 1.0L) * std::tgamma(n - k + 1.0L)));
}

// ---------------------------------------------------------------------------

void criterion1(const VerifyConfig&, Collector& col) {
    col.run("c1_closed_form", 1e-10, [] {
        const double a = cosine_multiplier(3, 1, 0), b = cosine_multiplier(3, 1, 2);
        return Outcome{std::max(std::abs(a - 0.5), std::abs(b - 0.125)), "c(3,1,0)=" + fmt(a) + " c(3,1,2)=" + fmt(b)};
    });
    for (int n = 3; n <= 5; ++n) {
        col.run("cimult_scaling" + tag(n), 1e-10, [n] {
            double r = 0.0;
            for (int i = 1; i < n; ++i)
                for (int k = 0; k <= 16; k += 2)
                    r = std::max(r, std::abs(cosine_multiplier(n, i, k) - oracle::cosine_ci(n, i, k)));
            return Outcome{r, "all i, even k <= 16 against monomial/Beta oracle"};
        });
        col.run("cosine_perp_symmetry" + tag(n), 1e-14, [n] {
            double r = 0.0;
            for (int i = 1; i < n; ++i)
                for (int k = 0; k <= 16; k += 2)
                    r = std::max(r, std::abs(cosine_multiplier(n, i, k) - cosine_multiplier(n, n - i, k)));
            return Outcome{r, "c^i = c^{n-i}"};
        });
    }
}

void criterion2(const VerifyConfig& cfg, Collector& col) {
    const int triples[3][3] = {{4, 1, 2}, {4, 1, 3}, {5, 2, 3}};
    const int kh = std::max(1, cfg.K / 2);
    int stream = 0;
    for (const auto& t : triples) {
        const int n = t[0], i = t[1], j = t[2];
        const std::string name = "_n" + std::to_string(n) + "_i" + std::to_string(i) + "_j" + std::to_string(j);
        Rng rng = make_rng(cfg, 2, stream++);
        std::vector<GrassProfile> ps;
        for (int r = 0; r < 20; ++r) ps.push_back(random_grass(n, i, kh, rng));
        col.run("rijci_defect" + name, 1e-8, [&] {
            double r = 0.0;
            for (const auto& p : ps) r = std::max(r, commutation_defect(n, i, j, p));
            return Outcome{r, "20 random profiles, band limit " + std::to_string(2 * kh)};
        });
        col.run("rijci_kernel" + name, 1e-8, [&] {
            // Explicit Beta-kernel R_{i,j} on both sides.
            const int K = 2 * kh;
            const double c = rijci_constant(n, i, j);
            double r = 0.0;
            for (int m = 0; m < 3; ++m) {
                const GrassProfile& p = ps[m];
                const GrassProfile cp = apply_multiplier(p, multipliers(TransformTag::cosine(i), n, K));
                const GrassProfile rp = expand_grass(
                    n, j, [&](double s) { return oracle::radon_ij([&](double x) { return eval_grass(p, x); }, i, j, s); },
                    K);
                const GrassProfile rhs = apply_multiplier(rp, multipliers(TransformTag::cosine(j), n, K));
                for (int l = 0; l <= 40; ++l) {
                    const double s = l / 40.0;
                    const double lhs = oracle::radon_ij([&](double x) { return eval_grass(cp, x); }, i, j, s);
                    r = std::max(r, std::abs(lhs - c * eval_grass(rhs, s)));
                }
            }
            return Outcome{r, "3 profiles, 41 points, tanh-sinh Radon kernel"};
        });
    }
}

void criterion3(const VerifyConfig& cfg, Collector& col) {
    col.run("grass_closed_forms", 1e-12, [] {
        const double a = grass_norm_sq(3, 1, 1), b = grass_basis_q(3, 2, 1, 1.0);
        return Outcome{std::max(std::abs(a - 0.2), std::abs(b - 0.25)), "norm=" + fmt(a) + " q=" + fmt(b)};
    });
    int stream = 0;
    for (int n = 4; n <= 5; ++n) {
        Rng rng = make_rng(cfg, 3, stream++);
        std::vector<ZonalProfile> gs;
        for (int r = 0; r < 5; ++r) gs.push_back(random_even_zonal(n, std::max(2, cfg.K), rng));
        col.run("radon_kernel_vs_ratio" + tag(n), 1e-6, [&] {
            double r = 0.0;
            for (int i = 1; i <= n - 2; ++i)
                for (const auto& g : gs)
                    r = std::max(r, coeff_distance(radon_sphere_kernel(n, i, g, cfg.points).coeffs,
                                                   radon_down(zonal_to_hyperplane(g), i).coeffs));
            return Outcome{r, "5 random even profiles, all i <= n-2"};
        });
    }
    for (int n = 4; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            col.run("haar_beta" + tag(n, i), 3.0, [&, n, i] {
                Rng rng = make_rng(cfg, 3, 100 + 10 * n + i);
                const long N = cfg.mc_samples;
                double sum[3] = {0, 0, 0}, sq[3] = {0, 0, 0};
                for (long m = 0; m < N; ++m) {
                    const auto q = grass_basis_values(n, i, 2, oracle::haar_s(n, i, rng));
                    for (int k = 1; k <= 2; ++k) {
                        const double y = q[k] * q[k];
                        sum[k] += y;
                        sq[k] += y * y;
                    }
                }
                double z = 0.0;
                std::string detail;
                for (int k = 1; k <= 2; ++k) {
                    const double mean = sum[k] / N;
                    const double se = std::sqrt(std::max(0.0, sq[k] / N - mean * mean) / N);
                    const double ref = grass_norm_sq(n, i, k);
                    z = std::max(z, std::abs(mean - ref) / se);
                    detail += "k=" + std::to_string(k) + " mc=" + fmt(mean) + " beta=" + fmt(ref) + "; ";
                }
                return Outcome{z, detail + "residual in standard errors, " + std::to_string(N) + " samples"};
            });
        }
}

void criterion4(const VerifyConfig& cfg, Collector& col) {
    for (int n : cfg.dims) {
        const MvalOptions o = mval_options(cfg, cfg.K);
        for (int i = 1; i < n; ++i) {
            col.run("triangle_pi" + tag(n, i), 1e-6, [&, n, i] {
                const ValuationRep v = builtin(Builtin::Pi, n, i, o);
                const ValuationRep k = to_klain(to_crofton(v, o), o);
                return Outcome{coeff_distance(k.grass.coeffs, klain_body_direct(v, o).coeffs), ""};
            });
        }
        Rng rng = make_rng(cfg, 4, n);
        std::vector<ValuationRep> vs;
        for (int r = 0; r < 10; ++r) vs.push_back(ValuationRep::from_generating(1 + r % (n - 1), random_even_zonal(n, cfg.K, rng)));
        col.run("triangle_random" + tag(n), 1e-6, [&, n] {
            double r = 0.0;
            for (const auto& v : vs)
                r = std::max(r, coeff_distance(to_klain(to_crofton(v, o), o).grass.coeffs, klain_body_direct(v, o).coeffs));
            return Outcome{r, "10 random even valuations"};
        });
        col.run("roundtrip" + tag(n), 1e-7, [&, n] {
            double r = 0.0;
            std::vector<ValuationRep> all = vs;
            for (int i = 1; i < n; ++i) all.push_back(builtin(Builtin::Pi, n, i, o));
            for (const auto& v : all)
                r = std::max(r, coeff_distance(to_generating(to_crofton(v, o), o).generating.coeffs, v.generating.coeffs));
            return Outcome{r, "generating -> crofton -> generating, Pi_i and 10 random"};
        });
    }
}

void criterion5(const VerifyConfig& cfg, Collector& col) {
    col.run("pi2_projection_volume", 1e-12, [&] {
        Rng rng = make_rng(cfg, 5, 0);
        const ValuationRep v = builtin(Builtin::Pi, 3, 2, mval_options(cfg, cfg.K));
        const ConvexBody Q = ConvexBody::unit_cube(3);
        double r = 0.0;
        for (int m = 0; m < 100; ++m) {
            const Vec u = random_direction(3, rng);
            r = std::max(r, std::abs(evaluate(v, Q, u) - projection_volume(Q, u)));
        }
        return Outcome{r, "100 random directions"};
    });
    for (int n : cfg.dims) {
        const MvalOptions o = mval_options(cfg, cfg.K);
        col.run("pi_ball_constant" + tag(n), 1e-10, [&, n] {
            Rng rng = make_rng(cfg, 5, n);
            double r = 0.0;
            for (int i = 1; i < n; ++i) {
                const ValuationRep v = builtin(Builtin::Pi, n, i, o);
                double lo = INFINITY, hi = -INFINITY;
                for (int m = 0; m < 20; ++m) {
                    const double h = evaluate(v, ConvexBody::ball(n, 1.0), random_direction(n, rng));
                    lo = std::min(lo, h);
                    hi = std::max(hi, h);
                }
                r = std::max(r, hi - lo);
            }
            return Outcome{r, "spread over 20 directions"};
        });
        for (int i = 1; i < n; ++i) {
            col.run("klain_ball" + tag(n, i), 1e-6, [&, n, i] {
                const ValuationRep k = to_klain(builtin(Builtin::Pi, n, i, o), o);
                const double rho = projection_klain_radius(n, i);
                auto disk = [rho](double r) { return rho * std::sqrt(std::max(0.0, 1.0 - r * r)); };
                const GrassProfile ball = expand_grass(n, i, disk, k.grass.band_limit(), Side::Sphere);
                const double coef = coeff_distance(k.grass.coeffs, ball.coeffs);
                double point = 0.0;
                for (int l = 0; l <= 50; ++l) {
                    const double r = l / 50.0;
                    point = std::max(point, std::abs(eval_grass_kernel(k.grass, r) - disk(r)));
                }
                return Outcome{std::max(coef, point),
                               "radius " + fmt(rho) + ", coefficient residual " + fmt(coef) + ", pointwise " + fmt(point)};
            });
            col.run("klain_support" + tag(n, i), 1e-8, [&, n, i] {
                const SupportCheck s = is_support_function(to_klain(builtin(Builtin::Pi, n, i, o), o).grass);
                return Outcome{std::max(0.0, -s.margin), "margin " + fmt(s.margin)};
            });
        }
    }
}

void criterion6(const VerifyConfig& cfg, Collector& col) {
    for (int n : cfg.dims) {
        const MvalOptions o = mval_options(cfg, cfg.K);
        col.run("lambda_iterate_pi" + tag(n), 1e-12, [&, n] {
            ValuationRep v = builtin(Builtin::Pi, n, n - 1, o);
            double r = 0.0;
            for (int i = n - 2; i >= 1; --i) {
                v = lambda_op(v);
                const ZonalProfile ref = scaled(builtin(Builtin::Pi, n, i, o).generating, factorial(n - 1) / factorial(i));
                r = std::max(r, coeff_distance(v.generating.coeffs, ref.coeffs));
            }
            return Outcome{r, "Λ^{n-1-i} Pi_{n-1} vs (n-1)!/i! Pi_i"};
        });
        col.run("lambda_branches" + tag(n), 1e-6, [&, n] {
            Rng rng = make_rng(cfg, 6, n);
            double r = 0.0;
            for (int i = 2; i < n; ++i) {
                for (const ValuationRep& v :
                     {builtin(Builtin::Pi, n, i, o), ValuationRep::from_generating(i, random_even_zonal(n, cfg.K, rng))}) {
                    const auto a = to_klain(lambda_op(v), o).grass.coeffs;
                    const auto b = lambda_op(to_klain(v, o)).grass.coeffs;
                    const auto c = to_klain(lambda_op(to_crofton(v, o)), o).grass.coeffs;
                    r = std::max({r, coeff_distance(a, b), coeff_distance(a, c)});
                }
            }
            return Outcome{r, "generating, crofton and klain branches"};
        });
    }
}

void criterion7(const VerifyConfig& cfg, Collector& col) {
    const double h = 1e-3;
    auto fd_error = [h](const ValuationRep& v, const ConvexBody& K, const Vec& u) {
        return std::abs(lambda_steiner_oracle(v, K, u, h) - evaluate(lambda_op(v), K, u));
    };
    col.run("steiner_fd_cube", 1e-5, [&] {
        const MvalOptions o = mval_options(cfg, cfg.K);
        Rng rng = make_rng(cfg, 7, 0);
        const ConvexBody Q = ConvexBody::unit_cube(3);
        std::vector<ValuationRep> vs{builtin(Builtin::Pi, 3, 2, o), builtin(Builtin::MeanSectionEven, 3, 2, o),
                                     ValuationRep::from_generating(2, random_even_zonal(3, cfg.K, rng))};
        std::vector<Vec> us{unit_vector(3, 0)};
        for (int m = 0; m < 5; ++m) us.push_back(random_direction(3, rng));
        double r = 0.0;
        for (const auto& v : vs)
            for (const auto& u : us) r = std::max(r, fd_error(v, Q, u));
        return Outcome{r, "Pi_2, MeanSection_2, random; h = 1e-3"};
    });
    for (int n : cfg.dims) {
        col.run("steiner_fd_ball" + tag(n), 1e-5, [&, n] {
            const MvalOptions o = mval_options(cfg, cfg.K);
            Rng rng = make_rng(cfg, 7, n);
            const ConvexBody B = ConvexBody::ball(n, 1.0);
            double r = 0.0;
            for (int i = 2; i < n; ++i) {
                r = std::max(r, fd_error(builtin(Builtin::Pi, n, i, o), B, random_direction(n, rng)));
                r = std::max(r, fd_error(ValuationRep::from_generating(i, random_even_zonal(n, cfg.K, rng)), B,
                                         random_direction(n, rng)));
            }
            return Outcome{r, "Pi_i and random, i = 2..n-1"};
        });
    }
}

double qni_oracle(int n, int i) {
    using oracle::kappa;
    return static_cast<double>((i - 1) / (2.0L * std::numbers::pi_v<long double> * (n + 1 - i)) * kappa(i - 1) *
                               kappa(i - 2) * kappa(n - i) / (kappa(i - 3) * kappa(n - 2)));
}

double cni_oracle(int n, int i) {
    using oracle::kappa;
    const long double num = static_cast<long double>(i) * (n - i - 1) * (n - i + 1) * kappa(n - i - 2) *
                            kappa(n - i - 2) * kappa(n - i + 1) * kappa(i);
    const long double den = 2.0L * (n - i) * (i + 1) * kappa(n - i - 3) * kappa(n - i) * kappa(n - i) * kappa(i - 1);
    return static_cast<double>(num / den);
}

void criterion8(const VerifyConfig& cfg, Collector& col) {
    const int K = std::min(cfg.K, 16);
    const MvalOptions o = mval_options(cfg, K);
    for (int i = 1; i <= 2; ++i) {
        col.run("lop_pipelines_n4" + std::string("_i") + std::to_string(i), 1e-5, [&, i] {
            Rng rng = make_rng(cfg, 8, i);
            std::vector<ValuationRep> vs{builtin(Builtin::Pi, 4, i, o)};
            for (int m = 0; m < 3; ++m) vs.push_back(ValuationRep::from_generating(i, random_even_zonal(4, K, rng)));
            double r = 0.0;
            for (const auto& v : vs)
                r = std::max(r, coeff_distance(l_op(v, o).generating.coeffs, l_op_berg(v, o).generating.coeffs));
            return Outcome{r, "Pi_i and 3 random, band limit " + std::to_string(K)};
        });
    }
    std::vector<int> dims = cfg.dims;
    if (std::find(dims.begin(), dims.end(), 4) == dims.end()) dims.push_back(4);
    for (int n : dims) {
        col.run("meansection_recursion" + tag(n), 1e-5, [&, n] {
            double r = 0.0;
            for (int i = 1; i <= n - 2; ++i) {
                const double C = static_cast<double>((n - i + 1) * oracle::kappa(n - i + 1) / (2.0L * oracle::kappa(n - i)));
                const double scalar = std::abs(cni_oracle(n, i) * qni_oracle(n, n + 1 - i) - C * qni_oracle(n, n - i)) /
                                      std::abs(C * qni_oracle(n, n - i));
                r = std::max({r, scalar, std::abs(meansection_recursion_constant(n, i) - C) / C});
                const auto out = l_op_berg(builtin(Builtin::MeanSection, n, n + 1 - i, o), o).generating;
                const auto ref = scaled(builtin(Builtin::MeanSection, n, n - i, o).generating, C);
                double scale = 0.0;
                for (double x : ref.coeffs) scale = std::max(scale, std::abs(x));
                r = std::max(r, coeff_distance(out.coeffs, ref.coeffs) / scale);
            }
            return Outcome{r, "relative; constant (n-i+1)k_{n-i+1}/(2k_{n-i})"};
        });
        col.run("lop_iterate_steinerJ" + tag(n), 1e-5, [&, n] {
            double r = std::abs(l_iterate_meansection(3, 1) - 2.0);
            ValuationRep J = builtin(Builtin::SteinerJ, n, 1, o);
            for (int i = 0; i <= n - 2; ++i) {
                if (i > 0) J = l_op_berg(J, o);
                const double C = static_cast<double>(std::tgamma(n + 1.0L) * oracle::kappa(n) /
                                                     (std::pow(2.0L, i) * std::tgamma(n - i + 1.0L) * oracle::kappa(n - i)));
                r = std::max(r, std::abs(l_iterate_meansection(n, i) - C) / C);
                const auto ref = scaled(builtin(Builtin::MeanSection, n, n - i, o).generating, C);
                double scale = 0.0;
                for (double x : ref.coeffs) scale = std::max(scale, std::abs(x));
                r = std::max(r, coeff_distance(J.generating.coeffs, ref.coeffs) / scale);
            }
            return Outcome{r, "relative; L^i J vs n!k_n/(2^i (n-i)! k_{n-i}) M_{n-i}"};
        });
    }
}

void criterion9(const VerifyConfig& cfg, Collector& col) {
    const MvalOptions o = mval_options(cfg, cfg.K);
    col.run("hard_fourier_n4_i2", 1e-6, [&] {
        Rng rng = make_rng(cfg, 9, 0);
        std::vector<ValuationRep> vs{to_klain(builtin(Builtin::Pi, 4, 2, o), o)};
        for (int m = 0; m < 3; ++m) vs.push_back(to_klain(ValuationRep::from_generating(2, random_even_zonal(4, cfg.K, rng)), o));
        double r = 0.0;
        for (const auto& v : vs) {
            const auto a = fourier_op(lambda_op(v), o).grass.coeffs;
            const auto b = scaled(l_op(fourier_op(v, o), o).grass, 2.0).coeffs;
            r = std::max(r, coeff_distance(a, b));
        }
        return Outcome{r, "F Λ vs 2 L F on Klain profiles"};
    });
    std::vector<int> dims = cfg.dims;
    if (std::find(dims.begin(), dims.end(), 4) == dims.end()) dims.push_back(4);
    for (int n : dims) {
        col.run("fourier_involution" + tag(n), 1e-9, [&, n] {
            Rng rng = make_rng(cfg, 9, n);
            double r = 0.0;
            for (int i = 1; i < n; ++i) {
                const ValuationRep v = ValuationRep::from_klain(random_grass(n, i, std::max(1, cfg.K / 2), rng));
                r = std::max(r, coeff_distance(fourier_op(fourier_op(v, o), o).grass.coeffs, v.grass.coeffs));
            }
            return Outcome{r, "random Klain profiles, all i"};
        });
    }
}

void criterion10(const VerifyConfig& cfg, Collector& col) {
    col.run("box_k1_zero", 0.0, [&] {
        double r = 0.0;
        for (int j = 2; j <= 8; ++j) r = std::max(r, std::abs(box_multiplier(j, 1)));
        for (int n : cfg.dims)
            for (int j = 2; j <= n; ++j)
                r = std::max(r, std::abs(multipliers(TransformTag::box(j), n, std::max(1, cfg.K)).values[1]));
        return Outcome{r, "box multiplier at k = 1"};
    });
    for (int n : cfg.dims) {
        Rng rng = make_rng(cfg, 10, n);
        ZonalProfile p = random_even_zonal(n, cfg.K, rng);
        for (int k = 1; k <= cfg.K; k += 2) p.coeffs[k] = uniform(rng) / ((k + 1.0) * (k + 1.0));
        p.coeffs[1] = 0.0;
        p.parity = Parity::Mixed;
        for (int j = 2; j <= n; ++j) {
            const double tol = j == n ? 1e-6 : 1e-4;
            col.run("berg_inverse" + tag(n) + "_j" + std::to_string(j), tol, [&, n, j] {
                const TransformOptions to{cfg.points, 0, 1e-8};
                const ZonalProfile boxed = apply_multiplier(p, multipliers(TransformTag::box(j), n, cfg.K, to));
                const ZonalProfile lib = apply_multiplier(boxed, multipliers(TransformTag::berg_conv(j), n, cfg.K, to));
                double r = coeff_distance(lib.coeffs, p.coeffs);
                std::string detail = "library F∘box " + fmt(r);
                double o = 0.0;
                for (int k = 0; k <= cfg.K; ++k) {
                    if (k == 1) continue;
                    o = std::max(o, std::abs(boxed.coeffs[k] * oracle::berg_multiplier(n, j, k) - p.coeffs[k]));
                }
                detail += ", closed-form kernel " + fmt(o);
                r = std::max(r, o);
                return Outcome{r, detail};
            });
        }
    }
}

void criterion11(const VerifyConfig& cfg, Collector& col) {
    col.run("total_mass", 1e-10, [] {
        struct Case {
            std::string name;
            ConvexBody K;
            int j;
            double V;
        };
        auto box = [](const std::vector<double>& a) {
            const int n = static_cast<int>(a.size());
            std::vector<Vec> pts;
            for (int m = 0; m < (1 << n); ++m) {
                Vec p(n);
                for (int d = 0; d < n; ++d) p[d] = (m >> d & 1) ? a[d] : 0.0;
                pts.push_back(p);
            }
            return ConvexBody::polytope(pts);
        };
        std::vector<Case> cases;
        const std::vector<double> a3{1.0, 2.0, 3.0}, a4{1.0, 0.5, 2.0, 1.5};
        for (int j = 0; j <= 2; ++j) {
            cases.push_back({"cube", ConvexBody::unit_cube(3), j, oracle::box_intrinsic_volume({1, 1, 1}, j)});
            cases.push_back({"box", box(a3), j, oracle::box_intrinsic_volume(a3, j)});
        }
        for (int j : {0, 3}) cases.push_back({"box4", box(a4), j, oracle::box_intrinsic_volume(a4, j)});
        {
            std::vector<Vec> seg{Vec::Zero(3), 2.0 * unit_vector(3, 0)};
            cases.push_back({"segment", ConvexBody::polytope(seg), 1, 2.0});
            cases.push_back({"segment", ConvexBody::polytope(seg), 2, 0.0});
            std::vector<Vec> sq;
            for (double x : {0.0, 1.5})
                for (double y : {0.0, 2.0}) {
                    Vec p(3);
                    p << x, y, 0.0;
                    sq.push_back(p);
                }
            cases.push_back({"rectangle", ConvexBody::polytope(sq), 1, 3.5});
            cases.push_back({"rectangle", ConvexBody::polytope(sq), 2, 3.0});
        }
        for (int n = 3; n <= 5; ++n) {
            for (int j = 0; j < n; ++j) cases.push_back({"ball", ConvexBody::ball(n, 1.5), j, oracle::ball_intrinsic_volume(n, j, 1.5)});
            for (int i = 1; i < n; ++i) cases.push_back({"subspace_cube", ConvexBody::subspace_cube(n, i), i, 1.0});
        }
        {
            const double t = 0.5;
            for (int j = 0; j <= 2; ++j) {
                double V = 0.0;
                for (int k = 0; k <= j; ++k)
                    V += binom_ld(3 - k, j - k) * static_cast<double>(oracle::kappa(3 - k) / oracle::kappa(3 - j)) *
                         std::pow(t, j - k) * oracle::box_intrinsic_volume({1, 1, 1}, k);
                cases.push_back({"cube+tB", ConvexBody::ball_sum(ConvexBody::unit_cube(3), t), j, V});
            }
        }
        cases.push_back({"zonal_ball", ConvexBody::zonal_smooth(make_zonal(3, {1.0})), 1, oracle::ball_intrinsic_volume(3, 1, 1.0)});
        double r = 0.0;
        std::string worst;
        for (const auto& c : cases) {
            const int n = c.K.dim();
            const double expected = n / binom_ld(n, c.j) * static_cast<double>(oracle::kappa(n - c.j)) * c.V;
            const double got = area_measure(c.K, c.j).total_mass();
            const double e = std::abs(got - expected) / std::max(1.0, std::abs(expected));
            if (e >= r) {
                r = e;
                worst = c.name + " order " + std::to_string(c.j);
            }
        }
        return Outcome{r, std::to_string(cases.size()) + " (body, order) pairs; worst " + worst};
    });
    col.run("steiner_sausage", 1e-8, [&] {
        Rng rng = make_rng(cfg, 11, 0);
        const ConvexBody Q = ConvexBody::unit_cube(3);
        double r = 0.0;
        for (double t : {0.1, 0.5, 1.0}) {
            const AreaMeasure S = area_measure(ConvexBody::ball_sum(Q, t), 2);
            for (int m = 0; m < 20; ++m) {
                std::vector<double> a(9, 0.0);
                for (int k = 0; k <= 8; k += 2) a[k] = uniform(rng);
                auto g = [a](double x) {
                    double s = 0.0;
                    for (int k = 0; k <= 8; k += 2) s += a[k] * oracle::legendre(3, k, x);
                    return s;
                };
                const Vec u = random_direction(3, rng);
                r = std::max(r, std::abs(pair(S, g, u) - oracle::sausage_pair(t, g, Eigen::Vector3d(u))));
            }
        }
        return Outcome{r, "t in {0.1, 0.5, 1}, 20 random even kernels each"};
    });
    col.run("cauchy_kubota", 1e-6, [&] {
        Rng rng = make_rng(cfg, 11, 1);
        auto abs_kernel = [](double t) { return std::abs(t); };
        auto rhs = [&](const ConvexBody& K, const ConvexBody& Kneg, const Vec& w) {
            // (κ_1/4κ_2) C_2(S_1(K) + S_1(-K)) at w^⊥
            return (pair(area_measure(K, 1), abs_kernel, w) + pair(area_measure(Kneg, 1), abs_kernel, w)) /
                   (2.0 * std::numbers::pi);
        };
        const ConvexBody Q = ConvexBody::unit_cube(3);
        std::vector<Vec> qneg;
        std::vector<Eigen::Vector3d> rnd3;
        std::vector<Vec> rnd, rndneg;
        for (int m = 0; m < 8; ++m) {
            Vec p(3);
            for (int d = 0; d < 3; ++d) p[d] = uniform(rng, 0.0, 1.0);
            rnd.push_back(p);
            rndneg.push_back(-p);
            rnd3.push_back(Eigen::Vector3d(p));
        }
        for (int m = 0; m < 8; ++m) {
            Vec p(3);
            for (int d = 0; d < 3; ++d) p[d] = -double(m >> d & 1);
            qneg.push_back(p);
        }
        const ConvexBody Qn = ConvexBody::polytope(qneg), P = ConvexBody::polytope(rnd), Pn = ConvexBody::polytope(rndneg);
        const ConvexBody B = ConvexBody::ball(3, 1.0);
        double r = 0.0;
        for (int m = 0; m < 10; ++m) {
            const Vec w = random_direction(3, rng);
            r = std::max(r, std::abs(oracle::cube_mean_section_width(Eigen::Vector3d(w)) - rhs(Q, Qn, w)));
            if (m < 4) r = std::max(r, std::abs(oracle::mean_section_width(rnd3, Eigen::Vector3d(w)) - rhs(P, Pn, w)));
            r = std::max(r, std::abs(2.0 - rhs(B, B, w)));
        }
        return Outcome{r, "cube (closed form), random polytope (adaptive quadrature), ball"};
    });
}

} // namespace

const char* criterion_title(int c) {
    static const char* titles[] = {"",
                                   "multiplier ground truth",
                                   "cosine/Radon commutation",
                                   "Radon consistency and Haar pushforward",
                                   "representation triangle and round trip",
                                   "projection-body identities",
                                   "derivation operator",
                                   "finite-difference Steiner oracle",
                                   "integration operator pipelines",
                                   "Fourier relation and involution",
                                   "Berg and box laws",
                                   "area-measure laws"};
    return c >= 1 && c <= criterion_count ? titles[c] : "unknown";
}

std::vector<CheckResult> run_criterion(int c, const VerifyConfig& cfg) {
    static const std::function<void(const VerifyConfig&, Collector&)> fns[] = {
        criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11};
    if (c < 1 || c > criterion_count) throw DomainError("verify: criterion must lie in 1..11");
    std::vector<CheckResult> out;
    Collector col(c, out);
    fns[c - 1](cfg, col);
    return out;
}

std::vector<CheckResult> run_all(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (int c = 1; c <= criterion_count; ++c) {
        auto r = run_criterion(c, cfg);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

} // namespace sphereval
