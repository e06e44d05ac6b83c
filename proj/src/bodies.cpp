#include "sphereval/bodies.hpp"

#include "sphereval/errors.hpp"
#include "sphereval/transforms.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sphereval {

namespace {

constexpr double pi = std::numbers::pi;

double clamp1(double t) { return std::clamp(t, -1.0, 1.0); }

// Orthonormal basis of the complement of unit vector v in R^d (d x (d-1)).
Eigen::MatrixXd complement_basis(const Vec& v) {
    const int d = static_cast<int>(v.size());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
    return Q.rightCols(d - 1);
}

bool next_combination(std::vector<int>& idx, int m) {
    const int d = static_cast<int>(idx.size());
    for (int k = d - 1; k >= 0; --k) {
        if (idx[k] < m - d + k) {
            ++idx[k];
            for (int l = k + 1; l < d; ++l) idx[l] = idx[l - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Vec unit_vector(int n, int k) {
    if (k < 0 || k >= n) throw DomainError("unit_vector: index out of range");
    Vec e = Vec::Zero(n);
    e[k] = 1.0;
    return e;
}

std::vector<Facet> hull_facets(const std::vector<Vec>& pts, double tol) {
    if (pts.empty()) throw DomainError("hull_facets: empty point set");
    const int d = static_cast<int>(pts[0].size());
    const int m = static_cast<int>(pts.size());
    std::vector<Facet> facets;
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int j = 0; j < m; ++j) {
            if (pts[j][0] < pts[lo][0]) lo = j;
            if (pts[j][0] > pts[hi][0]) hi = j;
        }
        Facet a, b;
        a.normal = Vec::Constant(1, 1.0);
        b.normal = Vec::Constant(1, -1.0);
        a.area = b.area = 1.0;
        for (int j = 0; j < m; ++j) {
            if (std::abs(pts[j][0] - pts[hi][0]) <= tol) a.vertices.push_back(j);
            if (std::abs(pts[j][0] - pts[lo][0]) <= tol) b.vertices.push_back(j);
        }
        facets.push_back(a);
        facets.push_back(b);
        return facets;
    }
    if (m < d) return facets;

    std::vector<int> idx(d);
    for (int k = 0; k < d; ++k) idx[k] = k;
    Eigen::MatrixXd A(d - 1, d);
    do {
        for (int r = 1; r < d; ++r) A.row(r - 1) = (pts[idx[r]] - pts[idx[0]]).transpose();
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-10);
        if (lu.rank() != d - 1) continue;
        Vec nu = lu.kernel().col(0).normalized();
        double c = nu.dot(pts[idx[0]]);
        double above = -1e300, below = 1e300;
        for (const auto& p : pts) {
            const double h = nu.dot(p) - c;
            above = std::max(above, h);
            below = std::min(below, h);
        }
        if (above <= tol) {
        } else if (below >= -tol) {
            nu = -nu;
            c = -c;
        } else {
            continue;
        }
        bool dup = false;
        for (const auto& f : facets)
            if ((f.normal - nu).norm() < 1e-7) dup = true;
        if (dup) continue;
        Facet f;
        f.normal = nu;
        for (int j = 0; j < m; ++j)
            if (std::abs(nu.dot(pts[j]) - c) <= tol) f.vertices.push_back(j);
        const Eigen::MatrixXd B = complement_basis(nu);
        std::vector<Vec> proj;
        for (int j : f.vertices) proj.push_back(B.transpose() * pts[j]);
        f.area = hull_volume(proj, tol);
        facets.push_back(std::move(f));
    } while (next_combination(idx, m));
    return facets;
}

double hull_volume(const std::vector<Vec>& pts, double tol) {
    if (pts.empty()) return 0.0;
    const int d = static_cast<int>(pts[0].size());
    if (d == 0) return 1.0;
    if (d == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }
    Vec c = Vec::Zero(d);
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    double v = 0.0;
    for (const auto& f : hull_facets(pts, tol)) {
        const double h = f.normal.dot(pts[f.vertices[0]]) - f.normal.dot(c);
        v += h * f.area;
    }
    return v / d;
}

std::shared_ptr<const PolytopeGeometry> analyze_polytope(const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw DomainError("polytope: vertex list must be nonempty");
    const int n = static_cast<int>(vertices[0].size());
    if (n < 2) throw DomainError("polytope: ambient dimension must be >= 2");
    for (const auto& v : vertices)
        if (v.size() != n) throw DomainError("polytope: vertices of mixed dimension");

    auto g = std::make_shared<PolytopeGeometry>();
    g->n = n;
    g->points = vertices;
    Vec c = Vec::Zero(n);
    for (const auto& v : vertices) c += v;
    c /= static_cast<double>(vertices.size());
    g->origin = c;

    Eigen::MatrixXd M(vertices.size(), n);
    double scale = 0.0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        M.row(j) = (vertices[j] - c).transpose();
        scale = std::max(scale, (vertices[j] - c).norm());
    }
    const double tol = 1e-9 * std::max(1.0, scale);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    int d = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()[k] > tol) ++d;
    g->dim = d;
    const Eigen::MatrixXd V = svd.matrixV();
    g->hull_basis = V.leftCols(d);

    std::vector<Vec> local;
    for (const auto& v : vertices) local.push_back(g->hull_basis.transpose() * (v - c));

    if (d == n) {
        g->facets = hull_facets(vertices, tol);
        g->volume = hull_volume(vertices, tol);
    } else {
        g->volume = d == 0 ? 1.0 : hull_volume(local, tol);
        if (d == n - 1) {
            Facet up, down;
            up.normal = V.col(n - 1);
            down.normal = -up.normal;
            up.area = down.area = g->volume;
            for (int j = 0; j < static_cast<int>(vertices.size()); ++j) {
                up.vertices.push_back(j);
                down.vertices.push_back(j);
            }
            g->facets = {up, down};
        }
    }

    if (n == 3) {
        if (d == 3) {
            const auto& F = g->facets;
            for (std::size_t a = 0; a < F.size(); ++a) {
                for (std::size_t b = a + 1; b < F.size(); ++b) {
                    std::vector<int> shared;
                    std::set_intersection(F[a].vertices.begin(), F[a].vertices.end(), F[b].vertices.begin(),
                                          F[b].vertices.end(), std::back_inserter(shared));
                    if (shared.size() < 2) continue;
                    double len = 0.0;
                    for (std::size_t x = 0; x < shared.size(); ++x)
                        for (std::size_t y = x + 1; y < shared.size(); ++y)
                            len = std::max(len, (vertices[shared[x]] - vertices[shared[y]]).norm());
                    if (len <= tol) continue;
                    Arc arc;
                    arc.a = F[a].normal;
                    const double cs = clamp1(F[a].normal.dot(F[b].normal));
                    arc.b = (F[b].normal - cs * F[a].normal).normalized();
                    arc.angle = std::acos(cs);
                    arc.weight = 0.5 * len;
                    g->arcs.push_back(arc);
                }
            }
        } else if (d == 2) {
            const Vec nu = V.col(2);
            for (const auto& e : hull_facets(local, tol)) {
                Arc arc;
                arc.a = nu;
                arc.b = g->hull_basis * e.normal;
                arc.angle = pi;
                arc.weight = 0.5 * e.area;
                g->arcs.push_back(arc);
            }
        } else if (d == 1) {
            Arc arc;
            arc.a = V.col(1);
            arc.b = V.col(2);
            arc.angle = 2.0 * pi;
            arc.weight = 0.5 * g->volume;
            g->arcs.push_back(arc);
        }
    }
    return g;
}

ConvexBody ConvexBody::polytope(const std::vector<Vec>& vertices) {
    return ConvexBody(PolytopeBody{analyze_polytope(vertices)});
}

ConvexBody ConvexBody::ball(int n, double r) {
    if (n < 2) throw DomainError("ball: dimension must be >= 2");
    if (!(r >= 0.0)) throw DomainError("ball: radius must be nonnegative");
    return ConvexBody(BallBody{n, r});
}

ConvexBody ConvexBody::zonal_smooth(const ZonalProfile& h, double tol) {
    return zonal_smooth(h, unit_vector(h.n, 0), tol);
}

ConvexBody ConvexBody::zonal_smooth(const ZonalProfile& h, const Vec& axis, double tol) {
    if (axis.size() != h.n) throw DomainError("zonal_smooth: axis dimension mismatch");
    SupportCheckOptions o;
    o.tol = tol;
    const auto chk = is_support_function(h, o);
    if (!chk.ok)
        throw DomainError("zonal_smooth: profile is not a support function (margin " + std::to_string(chk.margin) +
                          ")");
    return ConvexBody(ZonalSmoothBody{h, axis.normalized()});
}

ConvexBody ConvexBody::subspace_cube(int n, int i) {
    if (n < 2 || i < 1 || i > n) throw DomainError("subspace_cube: need 1 <= i <= n");
    return ConvexBody(SubspaceCubeBody{n, i});
}

ConvexBody ConvexBody::ball_sum(const ConvexBody& base, double t) {
    if (!(t >= 0.0)) throw DomainError("ball_sum: parameter t must be nonnegative");
    return ConvexBody(BallSumBody{std::make_shared<const ConvexBody>(base), t});
}

ConvexBody ConvexBody::unit_cube(int n) {
    std::vector<Vec> v;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec p(n);
        for (int k = 0; k < n; ++k) p[k] = (mask >> k) & 1;
        v.push_back(p);
    }
    return polytope(v);
}

int ConvexBody::dim() const {
    return std::visit(
        [](const auto& b) -> int {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, PolytopeBody>) return b.geom->n;
            else if constexpr (std::is_same_v<T, BallBody>) return b.n;
            else if constexpr (std::is_same_v<T, ZonalSmoothBody>) return b.support.n;
            else if constexpr (std::is_same_v<T, SubspaceCubeBody>) return b.n;
            else return b.base->dim();
        },
        v_);
}

double support(const ConvexBody& K, const Vec& u) {
    if (u.size() != K.dim()) throw DomainError("support: direction dimension mismatch");
    if (std::abs(u.norm() - 1.0) > 1e-12) throw DomainError("support: direction must be a unit vector");
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, PolytopeBody>) {
                double h = -1e300;
                for (const auto& p : b.geom->points) h = std::max(h, u.dot(p));
                return h;
            } else if constexpr (std::is_same_v<T, BallBody>) {
                return b.r;
            } else if constexpr (std::is_same_v<T, ZonalSmoothBody>) {
                return eval_kernel(b.support, clamp1(u.dot(b.axis)));
            } else if constexpr (std::is_same_v<T, SubspaceCubeBody>) {
                double h = 0.0;
                for (int k = 0; k < b.i; ++k) h += 0.5 * std::abs(u[k]);
                return h;
            } else {
                return support(*b.base, u) + b.t;
            }
        },
        K.variant());
}

double AreaMeasure::total_mass() const {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                double s = 0.0;
                for (double x : m.masses) s += x;
                return s;
            } else if constexpr (std::is_same_v<T, UniformSphereMeasure> ||
                                 std::is_same_v<T, UniformSubsphereMeasure>) {
                return m.mass;
            } else if constexpr (std::is_same_v<T, ZonalDensityMeasure>) {
                return sphere_area(n - 1) * m.density.coeffs[0];
            } else if constexpr (std::is_same_v<T, ArcMeasure>) {
                double s = 0.0;
                for (const auto& a : m.arcs) s += a.weight * a.angle;
                return s;
            } else {
                double s = 0.0;
                for (const auto& [c, sub] : m.terms) s += c * sub->total_mass();
                return s;
            }
        },
        v);
}

Vec AreaMeasure::centroid() const {
    return std::visit(
        [&](const auto& m) -> Vec {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                Vec s = Vec::Zero(n);
                for (std::size_t j = 0; j < m.normals.size(); ++j) s += m.masses[j] * m.normals[j];
                return s;
            } else if constexpr (std::is_same_v<T, ZonalDensityMeasure>) {
                // only the degree-1 component has a nonzero first moment
                const double a1 = m.density.coeffs.size() > 1 ? m.density.coeffs[1] : 0.0;
                return sphere_area(n - 1) * a1 / n * m.axis;
            } else if constexpr (std::is_same_v<T, ArcMeasure>) {
                Vec s = Vec::Zero(n);
                for (const auto& a : m.arcs)
                    s += a.weight * (std::sin(a.angle) * a.a + (1.0 - std::cos(a.angle)) * a.b);
                return s;
            } else if constexpr (std::is_same_v<T, SteinerComboMeasure>) {
                Vec s = Vec::Zero(n);
                for (const auto& [c, sub] : m.terms) s += c * sub->centroid();
                return s;
            } else {
                return Vec::Zero(n);
            }
        },
        v);
}

namespace {

AreaMeasure uniform_sphere(int n, double mass) {
    AreaMeasure S;
    S.n = n;
    S.v = UniformSphereMeasure{mass};
    return S;
}

[[noreturn]] void unsupported(const std::string& body, int n, int j) {
    throw CapabilityError("area_measure: S_" + std::to_string(j) + " of a " + body + " in dimension " +
                          std::to_string(n) + " is not supported");
}

AreaMeasure polytope_measure(const PolytopeGeometry& g, int j) {
    const int n = g.n;
    if (j == 0) return uniform_sphere(n, n * kappa(n));
    AreaMeasure S;
    S.n = n;
    if (j == n - 1) {
        AtomicMeasure a;
        for (const auto& f : g.facets) {
            a.normals.push_back(f.normal);
            a.masses.push_back(f.area);
        }
        S.v = std::move(a);
        return S;
    }
    if (n == 3 && j == 1) {
        S.v = ArcMeasure{g.arcs};
        return S;
    }
    unsupported("polytope", n, j);
}

} // namespace

AreaMeasure area_measure(const ConvexBody& K, int j) {
    const int n = K.dim();
    if (j < 0 || j > n - 1)
        throw DomainError("area_measure: order must lie in 0.." + std::to_string(n - 1) + ", got " +
                          std::to_string(j));
    return std::visit(
        [&](const auto& b) -> AreaMeasure {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, PolytopeBody>) {
                return polytope_measure(*b.geom, j);
            } else if constexpr (std::is_same_v<T, BallBody>) {
                return uniform_sphere(n, std::pow(b.r, j) * n * kappa(n));
            } else if constexpr (std::is_same_v<T, ZonalSmoothBody>) {
                if (j == 0) return uniform_sphere(n, n * kappa(n));
                if (j != 1) unsupported("zonal smooth body", n, j);
                const auto box = multipliers(TransformTag::box(n), n, b.support.band_limit());
                ZonalProfile dens = apply_multiplier(b.support, box);
                AreaMeasure S;
                S.n = n;
                S.v = ZonalDensityMeasure{dens, b.axis};
                return S;
            } else if constexpr (std::is_same_v<T, SubspaceCubeBody>) {
                if (j == 0) return uniform_sphere(n, n * kappa(n));
                if (j == b.i) {
                    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, n - b.i);
                    for (int k = 0; k < n - b.i; ++k) basis(b.i + k, k) = 1.0;
                    AreaMeasure S;
                    S.n = n;
                    S.v = UniformSubsphereMeasure{basis, n * kappa(n - b.i) / binomial(n, b.i)};
                    return S;
                }
                std::vector<Vec> verts;
                for (int mask = 0; mask < (1 << b.i); ++mask) {
                    Vec p = Vec::Zero(n);
                    for (int k = 0; k < b.i; ++k) p[k] = ((mask >> k) & 1) ? 0.5 : -0.5;
                    verts.push_back(p);
                }
                return polytope_measure(*analyze_polytope(verts), j);
            } else {
                SteinerComboMeasure combo;
                for (int l = 0; l <= j; ++l) {
                    const double c = std::pow(b.t, j - l) * binomial(j, l);
                    combo.terms.emplace_back(c, std::make_shared<const AreaMeasure>(area_measure(*b.base, l)));
                }
                AreaMeasure S;
                S.n = n;
                S.v = std::move(combo);
                return S;
            }
        },
        K.variant());
}

namespace {

double pair_impl(const AreaMeasure& S, const Kernel& g, const ZonalProfile* prof, const Vec& u,
                 const PairingOptions& opts) {
    const int n = S.n;
    if (u.size() != n) throw DomainError("pair: direction dimension mismatch");
    auto mean_multipliers = [&](int K) {
        if (prof && !prof->exact) {
            std::vector<double> m(K + 1, 0.0);
            double r = 1.0;
            for (int k = 0; k <= std::min(K, prof->band_limit()); ++k, r *= prof->abel)
                m[k] = r * prof->coeffs[k] / harmonic_dim(n, k);
            return m;
        }
        FunkHeckeOptions fh;
        fh.points = std::max(2 * opts.points, 2 * K + 64);
        fh.check = false;
        return funk_hecke_all(n, K, g, fh);
    };
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                double s = 0.0;
                for (std::size_t j = 0; j < m.normals.size(); ++j) s += m.masses[j] * g(clamp1(u.dot(m.normals[j])));
                return s;
            } else if constexpr (std::is_same_v<T, UniformSphereMeasure>) {
                return m.mass * mean_multipliers(0)[0];
            } else if constexpr (std::is_same_v<T, UniformSubsphereMeasure>) {
                const int d = static_cast<int>(m.basis.cols());
                const double rho = std::min(1.0, (m.basis.transpose() * u).norm());
                if (d == 1) return m.mass * 0.5 * (g(rho) + g(-rho));
                auto rule = sphere_rule(d, opts.points);
                double s = 0.0;
                for (std::size_t l = 0; l < rule->size(); ++l) s += rule->weights[l] * g(rho * rule->nodes[l]);
                return m.mass * s;
            } else if constexpr (std::is_same_v<T, ZonalDensityMeasure>) {
                if (m.density.n != n) throw DomainError("pair: density dimension mismatch");
                const int K = m.density.band_limit();
                const auto mk = mean_multipliers(K);
                const auto P = zonal_basis_all(n, K, clamp1(u.dot(m.axis)));
                double s = 0.0;
                for (int k = 0; k <= K; ++k) s += m.density.coeffs[k] * mk[k] * P[k];
                return sphere_area(n - 1) * s;
            } else if constexpr (std::is_same_v<T, ArcMeasure>) {
                double s = 0.0;
                for (const auto& arc : m.arcs) {
                    const double A = u.dot(arc.a), B = u.dot(arc.b);
                    const double phi0 = std::atan2(B, A);
                    std::vector<double> cuts{0.0, arc.angle};
                    const double q = 0.5 * pi;
                    for (int k = static_cast<int>(std::floor(-phi0 / q)) - 1;
                         k <= static_cast<int>(std::ceil((arc.angle - phi0) / q)) + 1; ++k) {
                        const double c = phi0 + k * q;
                        if (c > 1e-14 && c < arc.angle - 1e-14) cuts.push_back(c);
                    }
                    std::sort(cuts.begin(), cuts.end());
                    double piece = 0.0;
                    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
                        const auto gl = gauss_legendre(opts.arc_points, cuts[c], cuts[c + 1]);
                        for (std::size_t l = 0; l < gl.size(); ++l) {
                            const double phi = gl.nodes[l];
                            piece += gl.weights[l] * g(clamp1(A * std::cos(phi) + B * std::sin(phi)));
                        }
                    }
                    s += arc.weight * piece;
                }
                return s;
            } else {
                double s = 0.0;
                for (const auto& [c, sub] : m.terms)
                    if (c != 0.0) s += c * pair_impl(*sub, g, prof, u, opts);
                return s;
            }
        },
        S.v);
}

} // namespace

double pair(const AreaMeasure& S, const ZonalProfile& g, const Vec& u, const PairingOptions& opts) {
    if (g.n != S.n) throw DomainError("pair: generating profile dimension mismatch");
    Kernel f = [&g](double t) { return eval_kernel(g, t); };
    return pair_impl(S, f, &g, u, opts);
}

double pair(const AreaMeasure& S, const Kernel& g, const Vec& u, const PairingOptions& opts) {
    return pair_impl(S, g, nullptr, u, opts);
}

double projection_volume(const ConvexBody& K, const Vec& u) {
    const auto* P = std::get_if<PolytopeBody>(&K.variant());
    if (!P) throw DomainError("projection_volume: body must be a polytope");
    if (P->geom->dim != P->geom->n) throw DomainError("projection_volume: polytope must be full-dimensional");
    if (u.size() != P->geom->n) throw DomainError("projection_volume: direction dimension mismatch");
    double s = 0.0;
    for (const auto& f : P->geom->facets) s += f.area * std::abs(u.dot(f.normal));
    return 0.5 * s;
}

namespace {

// First and second derivative by Richardson-extrapolated central differences.
void derivs(const std::function<double(double)>& G, double x, double h, double& d1, double& d2) {
    const double g0 = G(x);
    const double gp1 = G(x + h), gm1 = G(x - h), gp2 = G(x + 2 * h), gm2 = G(x - 2 * h);
    const double d1h = (gp1 - gm1) / (2 * h), d1H = (gp2 - gm2) / (4 * h);
    const double d2h = (gp1 - 2 * g0 + gm1) / (h * h), d2H = (gp2 - 2 * g0 + gm2) / (4 * h * h);
    d1 = (4 * d1h - d1H) / 3;
    d2 = (4 * d2h - d2H) / 3;
}

// Rounding noise of the difference quotients: perturbation δG of the samples
// is amplified by at most 6/h² in d2.
double fd_noise(double g, double d1, double c, double h) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double dG = 4.0 * eps * (std::abs(g) + std::abs(d1) / std::max(c, 1e-300));
    return 6.0 * dG / (h * h);
}

} // namespace

namespace {

/// Poisson radius with r^deg = tail at the top degree, or 1 when no smoothing applies.
double poisson_radius(bool truncated, int deg, const SupportCheckOptions& opts) {
    if (!truncated || opts.smoothing_tail <= 0.0 || deg < 1) return 1.0;
    return std::pow(opts.smoothing_tail, 1.0 / deg);
}

} // namespace

SupportCheck is_support_function(const ZonalProfile& in, const SupportCheckOptions& opts) {
    if (in.n < 3) throw DomainError("is_support_function: dimension must be >= 3");
    const double r = poisson_radius(!in.exact && tail_warning(in), in.band_limit(), opts);
    ZonalProfile p = in;
    if (r < 1.0) {
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) p.coeffs[k] *= std::pow(r * p.abel, static_cast<double>(k));
        p.abel = 1.0;
    }
    auto G = [&p](double th) { return eval_kernel(p, clamp1(std::cos(th))); };
    SupportCheck out;
    out.smoothing = r;
    out.margin = 1e300;
    for (int l = 0; l < opts.grid; ++l) {
        const double th = pi * (l + 0.5) / opts.grid;
        double d1, d2;
        derivs(G, th, opts.step, d1, d2);
        const double g = G(th);
        const double noise = fd_noise(g, d1, 1.0, opts.step);
        out.margin = std::min(out.margin, g + d2 + noise);
        out.margin = std::min(out.margin, g + d1 * std::cos(th) / std::sin(th) + noise);
    }
    out.ok = out.margin >= -opts.tol;
    out.band_warning = !in.exact && tail_warning(in);
    return out;
}

SupportCheck is_support_function(const GrassProfile& in, const SupportCheckOptions& opts) {
    const double r = poisson_radius(!in.exact && tail_warning(in), in.band_limit(), opts);
    GrassProfile p = in;
    if (r < 1.0)
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) p.coeffs[k] *= std::pow(r, 2.0 * k);
    auto G = [&p](double psi) { return eval_grass_kernel(p, std::min(1.0, std::abs(std::sin(psi)))); };
    SupportCheck out;
    out.smoothing = r;
    out.margin = 1e300;
    for (int l = 0; l < opts.grid; ++l) {
        const double psi = 0.5 * pi * (l + 0.5) / opts.grid;
        double d1, d2;
        derivs(G, psi, opts.step, d1, d2);
        const double g = G(psi);
        // r = sin ψ carries an absolute rounding error ε, so G is perturbed by ε|F'(r)| = ε|G'|/cos ψ.
        const double noise = fd_noise(g, d1, std::cos(psi), opts.step);
        out.margin = std::min(out.margin, g + d2 + noise);
        if (p.i >= 2) out.margin = std::min(out.margin, g + d1 * std::cos(psi) / std::sin(psi) + noise);
        if (p.n - p.i >= 2) out.margin = std::min(out.margin, g - d1 * std::sin(psi) / std::cos(psi) + noise);
    }
    out.ok = out.margin >= -opts.tol;
    out.band_warning = !in.exact && tail_warning(in);
    return out;
}

} // namespace sphereval
