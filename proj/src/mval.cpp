#include "sphereval/mval.hpp"

#include "sphereval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace sphereval {

std::string to_string(RepKind k) {
    switch (k) {
    case RepKind::Generating: return "generating";
    case RepKind::Crofton: return "crofton";
    default: return "klain";
    }
}

RepKind rep_from_string(const std::string& s) {
    if (s == "generating") return RepKind::Generating;
    if (s == "crofton") return RepKind::Crofton;
    if (s == "klain") return RepKind::Klain;
    throw DomainError("unknown representation '" + s + "' (expected generating|crofton|klain)");
}

namespace {

void check_degree(int n, int i) {
    if (n < 3) throw DomainError("valuation: dimension must be >= 3");
    if (i < 1 || i > n - 1)
        throw DegreeError("valuation: degree must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(i));
}

void require_even(const ZonalProfile& g, const char* what) {
    if (detect_parity(g.coeffs, 1e-12) != Parity::Even)
        throw DomainError(std::string(what) + ": generating function must be even");
}

void require_kind(const ValuationRep& v, RepKind k, const char* what) {
    if (v.kind != k)
        throw DomainError(std::string(what) + ": expected " + to_string(k) + " form, got " + to_string(v.kind));
}

} // namespace

ValuationRep ValuationRep::from_generating(int i, ZonalProfile g) {
    check_degree(g.n, i);
    ValuationRep v;
    v.n = g.n;
    v.i = i;
    v.kind = RepKind::Generating;
    v.generating = std::move(g);
    return v;
}

ValuationRep ValuationRep::from_crofton(GrassProfile mu) {
    check_degree(mu.n, mu.i);
    ValuationRep v;
    v.n = mu.n;
    v.i = mu.i;
    v.kind = RepKind::Crofton;
    mu.side = Side::Grassmannian;
    v.grass = std::move(mu);
    return v;
}

ValuationRep ValuationRep::from_klain(GrassProfile h) {
    check_degree(h.n, h.i);
    ValuationRep v;
    v.n = h.n;
    v.i = h.i;
    v.kind = RepKind::Klain;
    h.side = Side::Sphere;
    v.grass = std::move(h);
    return v;
}

ValuationRep builtin(Builtin b, int n, int index, const MvalOptions& opts) {
    if (n < 3) throw DomainError("builtin: dimension must be >= 3");
    const int K = opts.K;
    const double omega = plain_measure(n);
    switch (b) {
    case Builtin::Pi: {
        check_degree(n, index);
        ZonalProfile g = expand_zonal(n, [](double t) { return 0.5 * std::abs(t); }, K);
        return ValuationRep::from_generating(index, g);
    }
    case Builtin::MeanSectionEven:
    case Builtin::MeanSection: {
        const bool even = b == Builtin::MeanSectionEven;
        if (index < 2 || index > n)
            throw DegreeError("MeanSection: index must lie in 2.." + std::to_string(n) + ", got " +
                              std::to_string(index));
        const double q = q_ni(n, index);
        const auto berg = berg_conv_multipliers(n, index, K, opts.transforms);
        std::vector<double> a(K + 1, 0.0);
        for (int k = 0; k <= K; k += even ? 2 : 1) a[k] = harmonic_dim(n, k) * q * berg.values[k] / omega;
        ZonalProfile g = make_zonal(n, std::move(a));
        const double c = q / sphere_area(index - 1);
        if (even) g.parity = Parity::Even;
        if (Kernel z = berg_zeta_closed_form(index)) {
            if (even)
                g.exact = [z, c](double t) { return 0.5 * c * (z(t) + z(-t)); };
            else
                g.exact = [z, c](double t) { return c * z(t); };
        } else if (!even) {
            g.abel = BergZetaOptions{}.abel;
        }
        return ValuationRep::from_generating(n + 1 - index, g);
    }
    case Builtin::SteinerJ: {
        std::vector<double> a(K + 1, 0.0);
        for (int k = 0; k <= K; ++k)
            if (k != 1) a[k] = harmonic_dim(n, k) / box_multiplier(n, k) / omega;
        ZonalProfile g = make_zonal(n, std::move(a));
        if (Kernel z = berg_zeta_closed_form(n)) {
            g.exact = [z, omega](double t) { return z(t) / omega; };
        } else {
            g.abel = BergZetaOptions{}.abel;
        }
        return ValuationRep::from_generating(1, g);
    }
    }
    throw DomainError("builtin: unknown valuation");
}

ValuationRep builtin(const std::string& name, int n, const MvalOptions& opts) {
    static const std::regex pi_re("Pi_([0-9]+)"), ms_re("MeanSection(?:_even)?_([0-9]+)"),
        full_re("MeanSectionFull_([0-9]+)");
    std::smatch m;
    if (std::regex_match(name, m, pi_re)) return builtin(Builtin::Pi, n, std::stoi(m[1]), opts);
    if (std::regex_match(name, m, ms_re)) return builtin(Builtin::MeanSectionEven, n, std::stoi(m[1]), opts);
    if (std::regex_match(name, m, full_re)) return builtin(Builtin::MeanSection, n, std::stoi(m[1]), opts);
    if (name == "SteinerJ") return builtin(Builtin::SteinerJ, n, 1, opts);
    throw DomainError("builtin: unknown name '" + name + "' (expected Pi_<i>, MeanSection_<i>, MeanSectionFull_<i> or SteinerJ)");
}

double evaluate(const ValuationRep& v, const ConvexBody& K, const Vec& u, const PairingOptions& opts) {
    require_kind(v, RepKind::Generating, "evaluate");
    if (K.dim() != v.n) throw DomainError("evaluate: body dimension differs from valuation dimension");
    return pair(area_measure(K, v.i), v.generating, u, opts);
}

ValuationRep to_crofton(const ValuationRep& v, const MvalOptions& opts) {
    if (v.kind == RepKind::Crofton) return v;
    require_kind(v, RepKind::Generating, "to_crofton");
    require_even(v.generating, "to_crofton");
    const int K = v.generating.band_limit();
    const auto inv = multipliers(TransformTag::inverse_of(TransformTag::cosine(v.n - 1)), v.n, K, opts.transforms);
    if (inv.condition > opts.cond_cap)
        throw SingularOperatorError("to_crofton: inverse cosine transform condition " + std::to_string(inv.condition) +
                                    " exceeds cap at band limit " + std::to_string(K));
    const ZonalProfile g1 = apply_multiplier(v.generating, inv);
    GrassProfile mu = scaled(radon_sphere_kernel(v.n, v.i, g1), crofton_scale(v.n, v.i));
    mu.exact = nullptr;
    return ValuationRep::from_crofton(mu);
}

ValuationRep to_generating(const ValuationRep& v, const MvalOptions& opts) {
    if (v.kind == RepKind::Generating) return v;
    if (v.kind == RepKind::Klain) {
        // Klain = C_i μ̂
        const GrassProfile mu = apply_multiplier(
            v.grass, multipliers(TransformTag::inverse_of(TransformTag::cosine(v.i)), v.n, v.grass.band_limit(),
                                 opts.transforms));
        return to_generating(ValuationRep::from_crofton(mu), opts);
    }
    const int kh = static_cast<int>(v.grass.coeffs.size()) - 1;
    const auto d = radon_hyperplane_diag(v.n, v.i, kh);
    double lo = 1e300, hi = 0.0;
    for (double x : d) {
        lo = std::min(lo, std::abs(x));
        hi = std::max(hi, std::abs(x));
    }
    if (lo == 0.0 || hi / lo > opts.cond_cap)
        throw SingularOperatorError("to_generating: inverse Radon R_{n-1,i} condition exceeds cap");
    const auto c = multipliers(TransformTag::cosine(v.n - 1), v.n, 2 * kh, opts.transforms);
    const double scale = 1.0 / crofton_scale(v.n, v.i);
    std::vector<double> a(2 * kh + 1, 0.0);
    for (int k = 0; k <= kh; ++k) a[2 * k] = scale * c.values[2 * k] * v.grass.coeffs[k] / d[k];
    ZonalProfile g = make_zonal(v.n, std::move(a));
    g.parity = Parity::Even;
    return ValuationRep::from_generating(v.i, g);
}

ValuationRep to_klain(const ValuationRep& v, const MvalOptions& opts) {
    if (v.kind == RepKind::Klain) return v;
    if (v.kind == RepKind::Generating) {
        ValuationRep k = to_klain(to_crofton(v, opts), opts);
        if (v.generating.exact) k.grass.exact = klain_body_direct(v, opts).exact;
        return k;
    }
    const auto c = multipliers(TransformTag::cosine(v.i), v.n, v.grass.band_limit(), opts.transforms);
    GrassProfile h = apply_multiplier(v.grass, c);
    return ValuationRep::from_klain(h);
}

ValuationRep convert(const ValuationRep& v, RepKind target, const MvalOptions& opts) {
    switch (target) {
    case RepKind::Generating: return to_generating(v, opts);
    case RepKind::Crofton:
        if (v.kind == RepKind::Klain) return to_crofton(to_generating(v, opts), opts);
        return to_crofton(v, opts);
    default: return to_klain(v, opts);
    }
}

GrassProfile klain_body_direct(const ValuationRep& v, const MvalOptions& opts) {
    require_kind(v, RepKind::Generating, "klain_body_direct");
    const int n = v.n, i = v.i;
    const auto S = std::make_shared<const AreaMeasure>(area_measure(ConvexBody::subspace_cube(n, i), i));
    const ZonalProfile g = v.generating;
    const int points = opts.transforms.points;
    Kernel f = [S, g, n, points](double r) {
        Vec u = Vec::Zero(n);
        u[0] = r;
        u[n - 1] = std::sqrt(std::max(0.0, 1.0 - r * r));
        PairingOptions po;
        po.points = points;
        return pair(*S, g, u, po);
    };
    return expand_grass(n, i, f, g.band_limit(), Side::Sphere);
}

double projection_klain_radius(int n, int i) {
    check_degree(n, i);
    return n * kappa(n - i - 1) / ((n - i) * binomial(n, i));
}

ValuationRep combine(double a, const ValuationRep& v, double b, const ValuationRep& w) {
    if (v.i != w.i)
        throw DegreeError("combine: degrees differ (" + std::to_string(v.i) + " vs " + std::to_string(w.i) + ")");
    if (v.n != w.n || v.kind != w.kind) throw DomainError("combine: valuations differ in dimension or representation");
    ValuationRep r = v;
    auto mix = [a, b](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> z(std::max(x.size(), y.size()), 0.0);
        for (std::size_t k = 0; k < z.size(); ++k)
            z[k] = a * (k < x.size() ? x[k] : 0.0) + b * (k < y.size() ? y[k] : 0.0);
        return z;
    };
    if (v.kind == RepKind::Generating) {
        r.generating = make_zonal(v.n, mix(v.generating.coeffs, w.generating.coeffs));
    } else {
        r.grass.coeffs = mix(v.grass.coeffs, w.grass.coeffs);
        r.grass.exact = nullptr;
    }
    return r;
}

} // namespace sphereval
