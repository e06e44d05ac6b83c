#pragma once

#include "sphereval/profiles.hpp"

#include <Eigen/Dense>

#include <memory>
#include <variant>
#include <vector>

namespace sphereval {

using Vec = Eigen::VectorXd;

/// Unit vector e_k in R^n (0-based k).
Vec unit_vector(int n, int k);

struct Facet {
    Vec normal;
    double area = 0.0; ///< (n-1)-volume
    std::vector<int> vertices;
};

struct Edge {
    int a = 0, b = 0;
    double length = 0.0;
};

/// Great-circle arc φ ↦ a cos φ + b sin φ, φ ∈ [0, angle], with mass `weight` per radian.
struct Arc {
    Vec a, b;
    double angle = 0.0;
    double weight = 0.0;
};

/// Facial structure of the convex hull of a vertex list.
struct PolytopeGeometry {
    int n = 3;
    int dim = 0;                ///< dimension of the affine hull
    std::vector<Vec> points;    ///< input vertices
    Eigen::MatrixXd hull_basis; ///< n x dim orthonormal basis of the affine hull direction
    Vec origin;                 ///< a point of the affine hull (vertex centroid)
    std::vector<Facet> facets;  ///< facets (dim == n) or the two sides (dim == n-1)
    double volume = 0.0;        ///< dim-dimensional volume
    std::vector<Arc> arcs;      ///< second-order normal structure, n = 3 only
};

/// Convex hull facets of points in R^d (full-dimensional input), merged with tolerance.
std::vector<Facet> hull_facets(const std::vector<Vec>& pts, double tol);

/// d-volume of the convex hull of full-dimensional points in R^d.
double hull_volume(const std::vector<Vec>& pts, double tol);

std::shared_ptr<const PolytopeGeometry> analyze_polytope(const std::vector<Vec>& vertices);

struct PolytopeBody {
    std::shared_ptr<const PolytopeGeometry> geom;
};

struct BallBody {
    int n = 3;
    double r = 1.0;
};

/// Body of revolution about `axis` with support h(u) = H(u·axis).
struct ZonalSmoothBody {
    ZonalProfile support;
    Vec axis;
};

/// Centered cube [-1/2,1/2]^i in span(e_1..e_i).
struct SubspaceCubeBody {
    int n = 3;
    int i = 1;
};

class ConvexBody;

struct BallSumBody {
    std::shared_ptr<const ConvexBody> base;
    double t = 0.0;
};

class ConvexBody {
public:
    using Variant = std::variant<PolytopeBody, BallBody, ZonalSmoothBody, SubspaceCubeBody, BallSumBody>;

    static ConvexBody polytope(const std::vector<Vec>& vertices);
    static ConvexBody ball(int n, double r);
    /// Validates the support profile with is_support_function (margin ≥ -tol).
    static ConvexBody zonal_smooth(const ZonalProfile& h, double tol = 1e-8);
    static ConvexBody zonal_smooth(const ZonalProfile& h, const Vec& axis, double tol = 1e-8);
    static ConvexBody subspace_cube(int n, int i);
    static ConvexBody ball_sum(const ConvexBody& base, double t);
    /// Axis-parallel cube [0,1]^n.
    static ConvexBody unit_cube(int n);

    int dim() const;
    const Variant& variant() const { return v_; }

private:
    explicit ConvexBody(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

struct AreaMeasure;

struct AtomicMeasure {
    std::vector<Vec> normals;
    std::vector<double> masses;
};

struct UniformSphereMeasure {
    double mass = 0.0;
};

/// Uniform on the unit sphere of span(basis), basis n x d orthonormal.
struct UniformSubsphereMeasure {
    Eigen::MatrixXd basis;
    double mass = 0.0;
};

/// Density f(v) = Σ r_k P_k(v·axis) against the plain spherical measure.
struct ZonalDensityMeasure {
    ZonalProfile density;
    Vec axis;
};

struct ArcMeasure {
    std::vector<Arc> arcs;
};

struct SteinerComboMeasure {
    std::vector<std::pair<double, std::shared_ptr<const AreaMeasure>>> terms;
};

struct AreaMeasure {
    int n = 3;
    std::variant<AtomicMeasure, UniformSphereMeasure, UniformSubsphereMeasure, ZonalDensityMeasure, ArcMeasure,
                 SteinerComboMeasure>
        v;

    double total_mass() const;
    /// ∫ v dS(v).
    Vec centroid() const;
};

/// h(K, u). Requires |u| = 1 within 1e-12.
double support(const ConvexBody& K, const Vec& u);

/**
 * @brief S_j(K, ·) for the supported (body, order) pairs.
 * @throws CapabilityError for anything else.
 */
AreaMeasure area_measure(const ConvexBody& K, int j);

struct PairingOptions {
    int points = 128;     ///< uniform (sub)sphere quadrature
    int arc_points = 48;  ///< Gauss-Legendre points per arc piece
};

/// ∫ g(u·v) dS(v), plain measure.
double pair(const AreaMeasure& S, const ZonalProfile& g, const Vec& u, const PairingOptions& opts = {});
double pair(const AreaMeasure& S, const Kernel& g, const Vec& u, const PairingOptions& opts = {});

/// vol_{n-1}(K | u^⊥) of a full-dimensional polytope.
double projection_volume(const ConvexBody& K, const Vec& u);

struct SupportCheck {
    bool ok = false;
    /// Smallest sampled principal radius, net of the difference-quotient rounding noise.
    double margin = 0.0;
    bool band_warning = false;
    /// Poisson radius r applied as r^degree before testing (1: none).
    double smoothing = 1.0;
};

struct SupportCheckOptions {
    double tol = 1e-8;
    int grid = 200;
    double step = 1e-3;
    /**
     * Profiles without a closed form whose tail signals truncation are
     * Poisson-smoothed with r^K = smoothing_tail at the top degree K. The
     * Poisson kernel is positive, so support functions stay support
     * functions. 0 disables.
     */
    double smoothing_tail = 1e-3;
};

/// Principal radii test for the body of revolution with support H(u·axis).
SupportCheck is_support_function(const ZonalProfile& p, const SupportCheckOptions& opts = {});

/**
 * Principal radii test for the body with support F(|P_ē u|), ē of dimension p.i,
 * symmetric under O(i) x O(n-i). Used for Klain profiles.
 */
SupportCheck is_support_function(const GrassProfile& p, const SupportCheckOptions& opts = {});

} // namespace sphereval
