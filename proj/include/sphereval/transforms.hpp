#pragma once

#include "sphereval/constants.hpp"
#include "sphereval/profiles.hpp"

#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace sphereval {

enum class TransformKind { Cosine, RadonUp, RadonDown, Box, BergConv, Perp, Inverse };

/// Label of a rotation-intertwining operator with its dimension parameters.
struct TransformTag {
    TransformKind kind = TransformKind::Cosine;
    int i = 1; ///< source subspace dimension (Cosine, Radon, Perp)
    int j = 1; ///< target dimension (Radon) or kernel dimension (Box, BergConv)
    std::shared_ptr<const TransformTag> inner;

    static TransformTag cosine(int i);
    static TransformTag radon_up(int i, int j);
    static TransformTag radon_down(int j, int i);
    static TransformTag box(int j);
    static TransformTag berg_conv(int j);
    static TransformTag perp(int i);
    static TransformTag inverse_of(const TransformTag& t);

    std::string name() const;
};

struct TransformOptions {
    int points = 128;
    /// Series length for BergConv(j), j < n. 0 picks max(64, 32 K).
    int berg_terms = 0;
    /// Absolute tolerance on the Berg series extrapolation estimate.
    double berg_tol = 1e-8;
};

/// Multipliers of `tag` on S^{n-1} (or Gr_{i,n}) for degrees 0..K.
/// Inverse tags throw SingularOperatorError on a zero multiplier.
MultiplierSeq multipliers(const TransformTag& tag, int n, int K, const TransformOptions& opts = {});

/// Multiplier of C_i on the degree-k component (k even).
double cosine_multiplier(int n, int i, int k);

/// 1 - k(k+j-2)/(j-1).
double box_multiplier(int j, int k);

struct BergTable {
    std::vector<double> values; ///< BergConv(j) multipliers on S^{n-1}, k = 0..K
    std::vector<double> error;  ///< extrapolation error estimate per degree
    int terms = 0;
};

/**
 * @brief Multipliers of f ↦ f ∗ ζ_j on S^{n-1} (plain-measure convolution).
 *
 * For j = n these are 1/box_multiplier(n,k). For j < n the Funk-Hecke
 * multipliers of the S^{j-1} expansion of ζ_j are summed on S^{n-1} with
 * Richardson extrapolation. The degree-1 entry is 0: the operators act on
 * functions orthogonal to linear ones.
 * @throws TruncationError when the estimate exceeds opts.berg_tol.
 */
BergTable berg_conv_multipliers(int n, int j, int K, const TransformOptions& opts = {});

double berg_conv_multiplier(int n, int j, int k, const TransformOptions& opts = {});

struct BergZetaOptions {
    double abel = 0.995;
    /// Throw TruncationError if the tail estimate exceeds this value.
    double tolerance = std::numeric_limits<double>::infinity();
};

/**
 * Berg function ζ_j as a zonal profile on S^{j-1}: coefficients
 * N(j,k)/box_multiplier(j,k), degree 1 removed, Abel factor attached.
 * A closed form is attached for j ≤ 5.
 */
ZonalProfile berg_zeta(int j, int K, const BergZetaOptions& opts = {});

/// Closed form of ζ_j for j = 2..5, empty otherwise.
Kernel berg_zeta_closed_form(int j);

/// Identity on coefficients, index i → j.
GrassProfile radon_up(const GrassProfile& p, int j);

/// Coefficient k scaled by ‖q^{(j)}_{2k}‖²/‖q^{(i)}_{2k}‖², index j → i.
GrassProfile radon_down(const GrassProfile& p, int i);

/// Explicit-kernel R_{n-1,i} applied to an even zonal g (seen on hyperplanes).
GrassProfile radon_sphere_kernel(int n, int i, const ZonalProfile& g, int points = 128);

/// Diagonal of R_{n-1,i}: b_k = d_k a_{2k} for g with zonal coefficients a.
std::vector<double> radon_hyperplane_diag(int n, int i, int kh);

/// Sup-norm of R_{i,j}C_i p - const C_j R_{i,j} p on a grid in s.
double commutation_defect(int n, int i, int j, const GrassProfile& p);

/// s ↦ p(√(1-s²)) re-expanded on Gr_{n-i,n}.
GrassProfile perp(const GrassProfile& p);

/// perp(q^{(i)}_{2k}) = ε_k q^{(n-i)}_{2k}.
std::vector<double> perp_multipliers(int n, int i, int kh);

} // namespace sphereval
