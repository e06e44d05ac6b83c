#pragma once

// Reference computations for the verification suite. None of these call the
// library's quadrature, basis or transform code.

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <vector>

namespace sphereval::oracle {

using Fn = std::function<double(double)>;

/// π^{i/2}/Γ(i/2+1) in long double.
long double kappa(int i);

/// C_k^λ(t)/C_k^λ(1), λ = (n-2)/2, via Boost.
double legendre(int n, int k, double t);

/// c^1_k on S^{n-1} from the monomial expansion of C_k^λ and Beta integrals.
double cosine_c1(int n, int k);

/// nκ_iκ_{n-i}/(2κ_{n-1}C(n,i)) · c^1_k.
double cosine_ci(int n, int i, int k);

/// Berg function ζ_j (j = 2..5) at t = cos φ.
double berg_zeta(int j, double phi);

/// BergConv(j) multiplier on S^{n-1}: (ω_{n-2}/ω_{j-1}) ∫ ζ_j P_k sin^{n-2}φ dφ by tanh-sinh.
double berg_multiplier(int n, int j, int k);

/// (R_{i,j} f)(s) = E f(s σ), σ² ~ Beta(i/2, (j-i)/2), by tanh-sinh in σ = sin θ.
double radon_ij(const Fn& f, int i, int j, double s);

/// s = |P_E e_1| for a Haar-random i-subspace E of R^n (Gaussian frame, Householder QR).
double haar_s(int n, int i, std::mt19937_64& rng);

/// Intrinsic volume V_i of the ball of radius r in R^n.
double ball_intrinsic_volume(int n, int i, double r);

/// Elementary symmetric polynomial e_i(a): V_i of the box with sides a.
double box_intrinsic_volume(const std::vector<double>& a, int i);

/// ∫ g(u·v) dS_2(Q+tB, v) for Q = [0,1]^3 from faces, edge quarter-cylinders and vertex octants.
double sausage_pair(double t, const Fn& g, const Eigen::Vector3d& u);

/// Mean over lines ℓ ⊂ w^⊥ of the width of conv(vertices) along ℓ (exact on the arcs between projection ties).
double mean_section_width(const std::vector<Eigen::Vector3d>& vertices, const Eigen::Vector3d& w);

/// Same for the unit cube, closed form (2/π) Σ √(1-w_k²).
double cube_mean_section_width(const Eigen::Vector3d& w);

} // namespace sphereval::oracle
