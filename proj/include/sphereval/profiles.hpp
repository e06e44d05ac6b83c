#pragma once

#include "sphereval/specfun.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sphereval {

enum class Parity { Even, Odd, Mixed };

/// Which side of the hat duality a Grassmannian-indexed profile lives on.
enum class Side { Grassmannian, Sphere };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Zonal function on [-1,1] in the basis P_k^n.
struct ZonalProfile {
    int n = 3;
    std::vector<double> coeffs;
    Parity parity = Parity::Mixed;
    /// Tail estimate |a_K|/max|a_k| when the source was not band-limited.
    double truncation_error = 0.0;
    /// Optional closed form of the represented function (|t|, ζ_j, ...).
    Kernel exact;
    /// Abel factor r applied as r^k when evaluating without a closed form.
    double abel = 1.0;

    int band_limit() const { return static_cast<int>(coeffs.size()) - 1; }
};

/**
 * @brief SO(n-1)-invariant profile on Gr_{i,n} in the basis q^{(i)}_{2k}.
 *
 * coeffs[k] multiplies q^{(i)}_{2k}; the harmonic band limit is 2(coeffs.size()-1).
 * With side == Sphere the same coefficients describe a function of
 * r = |P_ē u| on S^{n-1} (the hat-dual picture).
 */
struct GrassProfile {
    int n = 3;
    int i = 1;
    std::vector<double> coeffs;
    Side side = Side::Grassmannian;
    double truncation_error = 0.0;
    /// Optional closed form in the invariant parameter s (or r).
    Kernel exact;

    int band_limit() const { return 2 * (static_cast<int>(coeffs.size()) - 1); }
};

/// Named diagonal operator, values[k] acts on harmonic degree k.
struct MultiplierSeq {
    std::string name;
    int n = 3;
    std::vector<double> values;
    /// Only even degrees are meaningful (Grassmannian transforms).
    bool even_only = false;
    /// max|m|/min|m| over the meaningful degrees.
    double condition = 1.0;

    int band_limit() const { return static_cast<int>(values.size()) - 1; }
};

Parity detect_parity(const std::vector<double>& coeffs, double tol = 0.0);

ZonalProfile make_zonal(int n, std::vector<double> coeffs);

/// Σ a_k P_k^n(t).
double eval_zonal(const ZonalProfile& p, double t);

/// Closed form when attached, otherwise the (Abel-weighted) series.
double eval_kernel(const ZonalProfile& p, double t);

struct ExpandOptions {
    int points = 0; ///< 0 selects max(128, 2K + 64)
};

/// Weighted projection onto P_0^n..P_K^n. Attaches f as the closed form.
ZonalProfile expand_zonal(int n, const Kernel& f, int K, const ExpandOptions& opts = {});

ZonalProfile even_part(const ZonalProfile& p);
ZonalProfile scaled(const ZonalProfile& p, double c);

/// True when |a_K|/max|a_k| exceeds 1e-6.
bool tail_warning(const ZonalProfile& p);
bool tail_warning(const GrassProfile& p);

/// Tabulated q^{(i)}_{2k} and the s-law on Gr_{i,n}, s = sin θ, θ ∈ [0, π/2].
struct GrassTable {
    int n = 3;
    int i = 1;
    int kh = 0; ///< largest half-degree tabulated
    std::vector<double> s, c, w; ///< sin θ_l, cos θ_l, probability weights
    std::vector<std::vector<double>> q; ///< q[l][k] = q^{(i)}_{2k}(s_l)
    std::vector<double> norm_sq;        ///< ‖q^{(i)}_{2k}‖²
};

std::shared_ptr<const GrassTable> grass_table(int n, int i, int kh);

/// q^{(i)}_{2k}(s) for k = 0..kh.
std::vector<double> grass_basis_values(int n, int i, int kh, double s);

double grass_basis_q(int n, int i, int k, double s);

/// Callable form of q^{(i)}_{2k}.
Kernel grass_basis_function(int n, int i, int k);

/// ∫ q^{(i)}_{2k}(s)² under the law of s = |P_E u₀| for Haar-random E.
double grass_norm_sq(int n, int i, int k);

/// Expansion of f(s) into q^{(i)}_{2k}, 2k ≤ K. Attaches f as the closed form.
GrassProfile expand_grass(int n, int i, const Kernel& f, int K, Side side = Side::Grassmannian);

/// Σ b_k q^{(i)}_{2k}(s).
double eval_grass(const GrassProfile& p, double s);

/// Closed form when attached, otherwise the series.
double eval_grass_kernel(const GrassProfile& p, double s);

/// Reinterpret between s = |P_E u₀| and r = |P_ē u|. Involution.
GrassProfile hat_dual(const GrassProfile& p);

/**
 * Even zonal g seen as a profile on Gr_{n-1,n} through the hyperplane normal:
 * s ↦ g(√(1-s²)). Coefficient k is a_{2k}/P_{2k}^n(0).
 */
GrassProfile zonal_to_hyperplane(const ZonalProfile& g);

/// Inverse of zonal_to_hyperplane.
ZonalProfile hyperplane_to_zonal(const GrassProfile& p);

GrassProfile scaled(const GrassProfile& p, double c);

/// Coefficient-wise product; throws DomainError on dimension or band mismatch.
ZonalProfile apply_multiplier(const ZonalProfile& p, const MultiplierSeq& m);
GrassProfile apply_multiplier(const GrassProfile& p, const MultiplierSeq& m);

/// Largest coefficient difference (missing entries count as zero).
double coeff_distance(const std::vector<double>& a, const std::vector<double>& b);

} // namespace sphereval
