#pragma once

#include "sphereval/mval.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sphereval {

/// Bookkeeping for one operator application.
struct OperatorReport {
    std::string op;
    RepKind input = RepKind::Generating;
    RepKind output = RepKind::Generating;
    int degree_in = 0;
    int degree_out = 0;
    /// (expression, value) of every scalar used.
    std::vector<std::pair<std::string, double>> constants;
    double condition = 1.0;
    /// Support-function margin of the output Klain profile (fourier_op only).
    double margin = 0.0;
};

/// Λ: degree i → i-1 in the same representation. Requires i ≥ 2.
ValuationRep lambda_op(const ValuationRep& v, OperatorReport* report = nullptr);

/**
 * d/dt at t=0 of evaluate(v, K+tB, u) by the one-sided five-point
 * difference, exact for Steiner polynomials of degree ≤ 4.
 */
double lambda_steiner_oracle(const ValuationRep& v, const ConvexBody& K, const Vec& u, double h,
                             const PairingOptions& opts = {});

/// 𝔏: degree i → i+1 in the same representation. Requires i ≤ n-2; generating input must be even.
ValuationRep l_op(const ValuationRep& v, const MvalOptions& opts = {}, OperatorReport* report = nullptr);

/// 𝔏 on generating functions via Berg multipliers; input may be odd or mixed but needs a zero degree-1 part.
ValuationRep l_op_berg(const ValuationRep& v, const MvalOptions& opts = {}, OperatorReport* report = nullptr);

/// 𝔽 on Klain profiles: degree i → n-i. Other representations are converted first.
ValuationRep fourier_op(const ValuationRep& v, const MvalOptions& opts = {}, OperatorReport* report = nullptr);

/// n!κ_n/(2^i (n-i)! κ_{n-i}), 0 ≤ i ≤ n-2.
double l_iterate_meansection(int n, int i);

} // namespace sphereval
