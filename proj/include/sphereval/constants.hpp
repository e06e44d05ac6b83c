#pragma once

namespace sphereval {

// Closed-form constants of the valuation calculus, all built from kappa().
// Every operator reads its scalar from here.

/// nκ_iκ_{n-i} / (2κ_{n-1} C(n,i)): c^i = cosine_scale · c^1.
double cosine_scale(int n, int i);

/// i!(n-i)!κ_iκ_{n-i} / (j!(n-j)!κ_jκ_{n-j}): R_{i,j} C_i = rijci · C_j R_{i,j}.
double rijci_constant(int n, int i, int j);

/// Plain spherical measure of S^{n-1}; converts probability averages to integrals.
double plain_measure(int n);

/// 2κ_{n-1}/κ_i, generating function to Crofton profile.
double crofton_scale(int n, int i);

/// nκ_{n-i}/C(n,i), total mass of S_i(K_ē) for a unit i-cube K_ē.
double subspace_mass(int n, int i);

/// (i-1)/(2π(n+1-i)) · κ_{i-1}κ_{i-2}κ_{n-i}/(κ_{i-3}κ_{n-2}), 2 ≤ i ≤ n.
double q_ni(int n, int i);

/// i(n-i-1)(n-i+1)κ²_{n-i-2}κ_{n-i+1}κ_i / (2(n-i)(i+1)κ_{n-i-3}κ²_{n-i}κ_{i-1}), 1 ≤ i ≤ n-2.
double c_ni(int n, int i);

/// iκ_i/κ_{i-1}
double lambda_crofton_constant(int n, int i);
/// (n-i+1)κ_{n-i+1}/κ_{n-i}
double lambda_klain_constant(int n, int i);

/// (n-i)κ_{i+1}κ_{n-i}/(2κ_iκ_{n-i-1})
double lop_generating_constant(int n, int i);
/// (n-i)κ_{n-i}/(2κ_{n-i-1})
double lop_crofton_constant(int n, int i);
/// (i+1)κ_{i+1}/(2κ_i)
double lop_klain_constant(int n, int i);

/// (n-i+1)κ_{n-i+1}/(2κ_{n-i}): 𝔏 M_{n+1-i} = const · M_{n-i}.
double meansection_recursion_constant(int n, int i);

/// n!κ_n/(2^i (n-i)! κ_{n-i}): 𝔏^i J = const · M_{n-i}, 0 ≤ i ≤ n-2.
double meansection_iterate_constant(int n, int i);

} // namespace sphereval
