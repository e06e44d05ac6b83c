#include "sphereval/lefschetz.hpp"

#include "sphereval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphereval {

namespace {

void fill(OperatorReport* r, const char* op, const ValuationRep& in, const ValuationRep& out) {
    if (!r) return;
    r->op = op;
    r->input = in.kind;
    r->output = out.kind;
    r->degree_in = in.i;
    r->degree_out = out.i;
}

void add_constant(OperatorReport* r, const char* expr, double value) {
    if (r) r->constants.emplace_back(expr, value);
}

void assert_degree(const ValuationRep& out, int expected, const char* op) {
    if (out.i != expected)
        throw std::logic_error(std::string(op) + ": degree bookkeeping violated, expected " + std::to_string(expected) +
                               ", got " + std::to_string(out.i));
}

} // namespace

ValuationRep lambda_op(const ValuationRep& v, OperatorReport* report) {
    if (v.i < 2) throw DegreeError("lambda: degree must be >= 2 (Λ lowers the degree), got " + std::to_string(v.i));
    const int n = v.n, i = v.i;
    ValuationRep out;
    switch (v.kind) {
    case RepKind::Generating:
        add_constant(report, "i", i);
        out = ValuationRep::from_generating(i - 1, scaled(v.generating, i));
        break;
    case RepKind::Crofton: {
        const double c = lambda_crofton_constant(n, i);
        add_constant(report, "i k_i / k_{i-1}", c);
        out = ValuationRep::from_crofton(scaled(radon_down(v.grass, i - 1), c));
        break;
    }
    case RepKind::Klain: {
        const double c = lambda_klain_constant(n, i);
        add_constant(report, "(n-i+1) k_{n-i+1} / k_{n-i}", c);
        out = ValuationRep::from_klain(scaled(radon_down(v.grass, i - 1), c));
        break;
    }
    }
    assert_degree(out, i - 1, "lambda");
    fill(report, "lambda", v, out);
    return out;
}

double lambda_steiner_oracle(const ValuationRep& v, const ConvexBody& K, const Vec& u, double h,
                             const PairingOptions& opts) {
    if (!(h > 0.0)) throw DomainError("lambda_steiner_oracle: step must be positive");
    auto f = [&](double t) { return evaluate(v, t == 0.0 ? K : ConvexBody::ball_sum(K, t), u, opts); };
    return (-25.0 * f(0.0) + 48.0 * f(h) - 36.0 * f(2.0 * h) + 16.0 * f(3.0 * h) - 3.0 * f(4.0 * h)) / (12.0 * h);
}

ValuationRep l_op(const ValuationRep& v, const MvalOptions& opts, OperatorReport* report) {
    const int n = v.n, i = v.i;
    if (i > n - 2)
        throw DegreeError("lop: degree must be <= n-2 = " + std::to_string(n - 2) + " (𝔏 raises the degree), got " +
                          std::to_string(i));
    ValuationRep out;
    switch (v.kind) {
    case RepKind::Generating: {
        if (detect_parity(v.generating.coeffs, 1e-12) != Parity::Even)
            throw DomainError("lop: generating branch needs an even generating function (use lop-berg otherwise)");
        const double A = lop_generating_constant(n, i);
        add_constant(report, "(n-i) k_{i+1} k_{n-i} / (2 k_i k_{n-i-1})", A);
        const GrassProfile r = radon_up(radon_sphere_kernel(n, i, v.generating, opts.transforms.points), i + 1);
        const int kh = static_cast<int>(r.coeffs.size()) - 1;
        const auto d = radon_hyperplane_diag(n, i + 1, kh);
        double lo = 1e300, hi = 0.0;
        for (double x : d) {
            lo = std::min(lo, std::abs(x));
            hi = std::max(hi, std::abs(x));
        }
        const double cond = lo > 0.0 ? hi / lo : INFINITY;
        if (report) report->condition = cond;
        if (cond > opts.cond_cap)
            throw SingularOperatorError("lop: inverse Radon R_{n-1,i+1} condition " + std::to_string(cond) +
                                        " exceeds cap");
        std::vector<double> a(2 * kh + 1, 0.0);
        for (int k = 0; k <= kh; ++k) a[2 * k] = A * r.coeffs[k] / d[k];
        ZonalProfile g = make_zonal(n, std::move(a));
        g.parity = Parity::Even;
        out = ValuationRep::from_generating(i + 1, g);
        break;
    }
    case RepKind::Crofton: {
        const double c = lop_crofton_constant(n, i);
        add_constant(report, "(n-i) k_{n-i} / (2 k_{n-i-1})", c);
        out = ValuationRep::from_crofton(scaled(radon_up(v.grass, i + 1), c));
        break;
    }
    case RepKind::Klain: {
        const double c = lop_klain_constant(n, i);
        add_constant(report, "(i+1) k_{i+1} / (2 k_i)", c);
        out = ValuationRep::from_klain(scaled(radon_up(v.grass, i + 1), c));
        break;
    }
    }
    assert_degree(out, i + 1, "lop");
    fill(report, "lop", v, out);
    return out;
}

ValuationRep l_op_berg(const ValuationRep& v, const MvalOptions& opts, OperatorReport* report) {
    const int n = v.n, i = v.i;
    if (v.kind != RepKind::Generating) throw DomainError("lop-berg: expected generating form");
    if (i > n - 2)
        throw DegreeError("lop-berg: degree must be <= n-2 = " + std::to_string(n - 2) + ", got " + std::to_string(i));
    const auto& a = v.generating.coeffs;
    const double amax = a.empty() ? 0.0 : std::abs(*std::max_element(a.begin(), a.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
    }));
    if (a.size() > 1 && std::abs(a[1]) > 1e-12 * std::max(1.0, amax))
        throw DomainError("lop-berg: generating function must have zero degree-1 component (C_o)");
    const int K = v.generating.band_limit();
    const auto inv = multipliers(TransformTag::inverse_of(TransformTag::berg_conv(n - i + 1)), n, K, opts.transforms);
    const auto fwd = berg_conv_multipliers(n, n - i, K, opts.transforms);
    const double c = c_ni(n, i);
    add_constant(report, "c_{n,i}", c);
    if (report) report->condition = inv.condition;
    std::vector<double> b(a.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) b[k] = c * inv.values[k] * fwd.values[k] * a[k];
    ZonalProfile g = make_zonal(n, std::move(b));
    g.abel = v.generating.abel;
    ValuationRep out = ValuationRep::from_generating(i + 1, g);
    assert_degree(out, i + 1, "lop-berg");
    fill(report, "lop-berg", v, out);
    return out;
}

ValuationRep fourier_op(const ValuationRep& v, const MvalOptions& opts, OperatorReport* report) {
    const ValuationRep kl = to_klain(v, opts);
    ValuationRep out = ValuationRep::from_klain(perp(kl.grass));
    assert_degree(out, v.n - v.i, "fourier");
    fill(report, "fourier", v, out);
    if (report) report->margin = is_support_function(out.grass).margin;
    return out;
}

double l_iterate_meansection(int n, int i) { return meansection_iterate_constant(n, i); }

} // namespace sphereval
