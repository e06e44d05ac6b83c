#pragma once

#include "sphereval/bodies.hpp"
#include "sphereval/profiles.hpp"
#include "sphereval/transforms.hpp"

#include <string>

namespace sphereval {

enum class RepKind { Generating, Crofton, Klain };

std::string to_string(RepKind k);
RepKind rep_from_string(const std::string& s);

/**
 * @brief Degree-i Minkowski valuation on R^n in one of three representations.
 *
 * Generating: zonal ğ with h(Φ_i K, u) = ∫ ğ(u·v) dS_i(K, v).
 * Crofton: μ̂ on Gr_{i,n}, density against the invariant probability measure.
 * Klain: h(Φ_i K_ē, ·) as a function of r = |P_ē u| (Side::Sphere).
 */
struct ValuationRep {
    int n = 3;
    int i = 1;
    RepKind kind = RepKind::Generating;
    ZonalProfile generating;
    GrassProfile grass;

    static ValuationRep from_generating(int i, ZonalProfile g);
    static ValuationRep from_crofton(GrassProfile mu);
    static ValuationRep from_klain(GrassProfile h);
};

enum class Builtin { Pi, MeanSectionEven, MeanSection, SteinerJ };

struct MvalOptions {
    int K = 32;
    /// Conditioning cap for inverse transforms.
    double cond_cap = 1e10;
    TransformOptions transforms;
};

/**
 * Pi: projection body operator Π_index (degree index).
 * MeanSectionEven: even part of M_index, degree n+1-index, 2 ≤ index ≤ n.
 * MeanSection: full M_index (mixed parity, degree-1 part removed).
 * SteinerJ: Steiner point map, degree 1 (index ignored; mixed parity).
 */
ValuationRep builtin(Builtin b, int n, int index, const MvalOptions& opts = {});

/// Parses "Pi_2", "MeanSection_3", "MeanSectionFull_3", "SteinerJ".
ValuationRep builtin(const std::string& name, int n, const MvalOptions& opts = {});

/// h(Φ_i K, u) from the generating form.
double evaluate(const ValuationRep& v, const ConvexBody& K, const Vec& u, const PairingOptions& opts = {});

ValuationRep to_crofton(const ValuationRep& v, const MvalOptions& opts = {});
ValuationRep to_generating(const ValuationRep& v, const MvalOptions& opts = {});
ValuationRep to_klain(const ValuationRep& v, const MvalOptions& opts = {});
ValuationRep convert(const ValuationRep& v, RepKind target, const MvalOptions& opts = {});

/// Klain profile computed by pairing ğ with S_i of a unit cube in ē.
GrassProfile klain_body_direct(const ValuationRep& v, const MvalOptions& opts = {});

/// Radius of the ball in ē^⊥ that is the Klain body of Π_i.
double projection_klain_radius(int n, int i);

/// a·v + b·w for valuations of the same (n, i, kind).
ValuationRep combine(double a, const ValuationRep& v, double b, const ValuationRep& w);

} // namespace sphereval
