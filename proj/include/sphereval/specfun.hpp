#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace sphereval {

using Kernel = std::function<double(double)>;

/// Volume of the i-dimensional unit ball, π^{i/2}/Γ(i/2+1).
double kappa(int i);

/**
 * @brief Γ-continuation of kappa to negative indices.
 *
 * Some closed-form constants (q_{n,i}, c_{n,i}) reference κ_{-1} = 1/π at the
 * edge of their range. Even negative indices are poles of 1/Γ and yield 0.
 */
double kappa_ext(int i);

/// Surface area of S^j, ω_j = (j+1) κ_{j+1}.
double sphere_area(int j);

/// Binomial coefficient as a double.
double binomial(int n, int k);

/// n!
double factorial(int n);

/// Dimension of the space of degree-k spherical harmonics on S^{n-1}.
double harmonic_dim(int n, int k);

/**
 * @brief Legendre polynomial of dimension n, P_k^n(1) = 1.
 * @throws DomainError for n < 3, k < 0 or |t| > 1.
 */
double legendre_nd(int n, int k, double t);

/**
 * Same recurrence as legendre_nd but also accepts n = 2 (Chebyshev T_k),
 * and no range check on t. Writes P_0..P_K into out[0..K].
 */
void zonal_basis_all(int n, int K, double t, double* out);
std::vector<double> zonal_basis_all(int n, int K, double t);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    double beta = 0.0;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss rule for the weight (1-t)^alpha (1+t)^beta on (-1,1).
QuadratureRule gauss_jacobi(double alpha, double beta, int m);

/// Symmetric Gauss rule for (1-t^2)^alpha.
QuadratureRule gauss_jacobi(double alpha, int m);

/// Shared immutable copy of gauss_jacobi(alpha, beta, m).
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(double alpha, double beta, int m);

/// Gauss-Legendre on [a, b].
QuadratureRule gauss_legendre(int m, double a, double b);

/**
 * @brief Probability-normalized rule on [-1,1] for the weight of S^{n-1},
 * split at t = 0.
 *
 * sum_j weights[j] f(nodes[j]) ≈ (ω_{n-2}/ω_{n-1}) ∫ f(t)(1-t²)^{(n-3)/2} dt.
 * Each half uses `points/2` Gauss-Jacobi nodes with the endpoint singularity
 * absorbed into the weight, so kernels with a kink at 0 stay spectral.
 */
std::shared_ptr<const QuadratureRule> sphere_rule(int n, int points);

/// Non-split version of sphere_rule (Gauss-Jacobi on the whole interval), exact
/// for polynomials of degree ≤ 2m-1.
std::shared_ptr<const QuadratureRule> sphere_rule_exact(int n, int m);

struct FunkHeckeOptions {
    int points = 128;
    double tol = 1e-10;
    bool check = true;
};

/**
 * @brief Funk-Hecke multiplier of a zonal kernel.
 *
 * m_k = (ω_{n-2}/ω_{n-1}) ∫ kernel(t) P_k^n(t) (1-t²)^{(n-3)/2} dt.
 * Valid for n ≥ 2. With `check`, the value is recomputed with twice the
 * points and a QuadratureError is thrown when the two disagree by more than
 * tol (relative to max(1, |m_k|)).
 */
double funk_hecke(int n, int k, const Kernel& kernel, const FunkHeckeOptions& opts = {});

/// All multipliers m_0..m_K at once.
std::vector<double> funk_hecke_all(int n, int K, const Kernel& kernel,
                                   const FunkHeckeOptions& opts = {});

} // namespace sphereval
