#include "sphereval/transforms.hpp"

#include "sphereval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

namespace sphereval {

namespace {

constexpr double pi = std::numbers::pi;

void check_n(int n) {
    if (n < 3) throw DomainError("dimension n must be >= 3, got " + std::to_string(n));
}

void check_i(int n, int i, const char* what) {
    if (i < 1 || i > n - 1)
        throw DomainError(std::string(what) + ": i must lie in 1.." + std::to_string(n - 1) +
                          ", got " + std::to_string(i));
}

const std::vector<double>& cosine_table(int n, int K) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    const auto key = std::make_pair(n, K);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FunkHeckeOptions fh;
    fh.points = std::max(128, 2 * K + 64);
    auto c = funk_hecke_all(n, K, [](double t) { return std::abs(t); }, fh);
    for (int k = 1; k <= K; k += 2) c[k] = 0.0;
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(c)).first->second;
}

} // namespace

TransformTag TransformTag::cosine(int i) { return {TransformKind::Cosine, i, i, nullptr}; }
TransformTag TransformTag::radon_up(int i, int j) { return {TransformKind::RadonUp, i, j, nullptr}; }
TransformTag TransformTag::radon_down(int j, int i) { return {TransformKind::RadonDown, j, i, nullptr}; }
TransformTag TransformTag::box(int j) { return {TransformKind::Box, j, j, nullptr}; }
TransformTag TransformTag::berg_conv(int j) { return {TransformKind::BergConv, j, j, nullptr}; }
TransformTag TransformTag::perp(int i) { return {TransformKind::Perp, i, i, nullptr}; }
TransformTag TransformTag::inverse_of(const TransformTag& t) {
    return {TransformKind::Inverse, t.i, t.j, std::make_shared<const TransformTag>(t)};
}

std::string TransformTag::name() const {
    std::ostringstream os;
    switch (kind) {
    case TransformKind::Cosine: os << "Cosine(" << i << ")"; break;
    case TransformKind::RadonUp: os << "RadonUp(" << i << "," << j << ")"; break;
    case TransformKind::RadonDown: os << "RadonDown(" << i << "," << j << ")"; break;
    case TransformKind::Box: os << "Box(" << j << ")"; break;
    case TransformKind::BergConv: os << "BergConv(" << j << ")"; break;
    case TransformKind::Perp: os << "Perp(" << i << ")"; break;
    case TransformKind::Inverse: os << "InverseOf(" << (inner ? inner->name() : "?") << ")"; break;
    }
    return os.str();
}

double cosine_multiplier(int n, int i, int k) {
    check_n(n);
    check_i(n, i, "cosine_multiplier");
    if (k < 0 || k % 2 != 0) throw DomainError("cosine_multiplier: degree must be even and >= 0");
    return cosine_scale(n, i) * cosine_table(n, std::max(k, 32))[k];
}

double box_multiplier(int j, int k) {
    if (j < 2) throw DomainError("box_multiplier: j must be >= 2");
    if (k < 0) throw DomainError("box_multiplier: degree must be nonnegative");
    return 1.0 - static_cast<double>(k) * (k + j - 2) / (j - 1);
}

Kernel berg_zeta_closed_form(int j) {
    switch (j) {
    case 2:
        return [](double t) {
            const double phi = std::acos(std::clamp(t, -1.0, 1.0));
            return -0.5 * std::cos(phi) + (pi - phi) * std::sin(phi);
        };
    case 3:
        return [](double t) {
            const double d = 2.0 * (4.0 / 3.0 - std::log(2.0));
            return 2.0 + 2.0 * t * std::log1p(-t) + d * t;
        };
    case 4:
        return [](double t) {
            const double phi = std::acos(std::clamp(t, -1.0, 1.0));
            const double sp = std::sin(phi);
            // (φ-π)/sin φ → -1 at the antipode
            const double ratio = sp > 1e-300 ? (phi - pi) / sp : -1.0;
            return 1.5 * ratio * std::cos(2.0 * phi) + 0.75 * t;
        };
    case 5:
        return [](double t) {
            const double d = 4.0 * (23.0 / 15.0 - std::log(2.0));
            return 4.0 * t * (3.0 * std::log1p(-t) + 1.0) / 3.0 + 4.0 * (3.0 * t - 2.0) / (3.0 * (t - 1.0)) +
                   d * t;
        };
    default: return nullptr;
    }
}

ZonalProfile berg_zeta(int j, int K, const BergZetaOptions& opts) {
    if (j < 2) throw DomainError("berg_zeta: j must be >= 2");
    if (K < 0) throw DomainError("berg_zeta: band limit must be nonnegative");
    ZonalProfile p;
    p.n = j;
    p.coeffs.assign(K + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
        if (k == 1) continue;
        p.coeffs[k] = harmonic_dim(j, k) / box_multiplier(j, k);
    }
    p.parity = Parity::Mixed;
    p.abel = opts.abel;
    p.exact = berg_zeta_closed_form(j);
    double mx = 0.0;
    for (double a : p.coeffs) mx = std::max(mx, std::abs(a));
    const double last = std::max(std::abs(p.coeffs[K]), K >= 1 ? std::abs(p.coeffs[K - 1]) : 0.0);
    p.truncation_error = mx > 0.0 ? last * std::pow(opts.abel, K) / mx : 0.0;
    if (p.truncation_error > opts.tolerance) {
        std::ostringstream os;
        os << "berg_zeta(" << j << "): truncation estimate " << p.truncation_error << " at K=" << K
           << " exceeds tolerance " << opts.tolerance;
        throw TruncationError(os.str());
    }
    return p;
}

namespace {

BergTable compute_berg(int n, int j, int K, int M) {
    BergTable tab;
    tab.terms = M;
    tab.values.assign(K + 1, 0.0);
    tab.error.assign(K + 1, 0.0);
    if (j == n) {
        for (int k = 0; k <= K; ++k)
            if (k != 1) tab.values[k] = 1.0 / box_multiplier(n, k);
        return tab;
    }
    const int M2 = 2 * M;
    const int mq = (M2 + K) / 2 + 2;
    auto rule = sphere_rule_exact(n, mq);
    std::vector<double> coef(M2 + 1, 0.0);
    for (int m = 0; m <= M2; ++m)
        if (m != 1) coef[m] = harmonic_dim(j, m) / box_multiplier(j, m);

    std::vector<double> pj(M2 + 1), pn(K + 1);
    // partial sums of the ζ_j series split by parity, truncated at M and 2M
    std::vector<double> sM(K + 1, 0.0), s2M(K + 1, 0.0);
    for (std::size_t q = 0; q < rule->size(); ++q) {
        const double x = rule->nodes[q];
        zonal_basis_all(j, M2, x, pj.data());
        zonal_basis_all(n, K, x, pn.data());
        double aM[2] = {0.0, 0.0}, a2M[2] = {0.0, 0.0};
        for (int m = 0; m <= M2; ++m) {
            const double v = coef[m] * pj[m];
            a2M[m % 2] += v;
            if (m <= M) aM[m % 2] += v;
        }
        const double w = rule->weights[q];
        for (int k = 0; k <= K; ++k) {
            sM[k] += w * pn[k] * aM[k % 2];
            s2M[k] += w * pn[k] * a2M[k % 2];
        }
    }
    const double ratio = sphere_area(n - 1) / sphere_area(j - 1);
    const int p = n - j + 2;
    const double rich = 1.0 / (std::pow(2.0, p) - 1.0);
    for (int k = 0; k <= K; ++k) {
        if (k == 1) continue;
        const double d = s2M[k] - sM[k];
        // (n - j) even: the series terminates and d vanishes
        const double v = (n - j) % 2 == 0 ? s2M[k] : s2M[k] + d * rich;
        tab.values[k] = ratio * v;
        tab.error[k] = ratio * std::abs(d) * rich;
    }
    return tab;
}

} // namespace

BergTable berg_conv_multipliers(int n, int j, int K, const TransformOptions& opts) {
    check_n(n);
    if (j < 2 || j > n)
        throw DomainError("BergConv: j must lie in 2.." + std::to_string(n) + ", got " + std::to_string(j));
    if (K < 0) throw DomainError("BergConv: band limit must be nonnegative");
    const int M = opts.berg_terms > 0 ? opts.berg_terms : std::max(64, 32 * K);

    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, BergTable> cache;
    const auto key = std::make_tuple(n, j, K, M);
    BergTable tab;
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            tab = it->second;
            found = true;
        }
    }
    if (!found) {
        tab = compute_berg(n, j, K, M);
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(key, tab);
    }
    int worst = 0;
    for (int k = 0; k <= K; ++k)
        if (tab.error[k] > tab.error[worst]) worst = k;
    if (tab.error[worst] > opts.berg_tol) {
        std::ostringstream os;
        os << "BergConv(" << j << ") on S^" << n - 1 << ": series truncated at " << M
           << " terms has extrapolation error " << tab.error[worst] << " at degree " << worst
           << " (tolerance " << opts.berg_tol << "); raise the band limit or berg_terms";
        throw TruncationError(os.str());
    }
    return tab;
}

double berg_conv_multiplier(int n, int j, int k, const TransformOptions& opts) {
    return berg_conv_multipliers(n, j, std::max(k, 0), opts).values.at(k);
}

namespace {

MultiplierSeq base_multipliers(const TransformTag& tag, int n, int K, const TransformOptions& opts) {
    MultiplierSeq m;
    m.name = tag.name();
    m.n = n;
    m.values.assign(K + 1, 0.0);
    switch (tag.kind) {
    case TransformKind::Cosine: {
        check_i(n, tag.i, "Cosine");
        m.even_only = true;
        const auto& c1 = cosine_table(n, std::max(K, 32));
        const double sc = cosine_scale(n, tag.i);
        for (int k = 0; k <= K; k += 2) m.values[k] = sc * c1[k];
        break;
    }
    case TransformKind::RadonUp:
        check_i(n, tag.i, "RadonUp");
        check_i(n, tag.j, "RadonUp");
        if (tag.i >= tag.j) throw DomainError("RadonUp: need i < j");
        m.even_only = true;
        for (int k = 0; k <= K; k += 2) m.values[k] = 1.0;
        break;
    case TransformKind::RadonDown: {
        check_i(n, tag.i, "RadonDown");
        check_i(n, tag.j, "RadonDown");
        if (tag.j >= tag.i) throw DomainError("RadonDown: need target dimension below source");
        m.even_only = true;
        auto src = grass_table(n, tag.i, K / 2);
        auto dst = grass_table(n, tag.j, K / 2);
        for (int k = 0; k <= K; k += 2) m.values[k] = src->norm_sq[k / 2] / dst->norm_sq[k / 2];
        break;
    }
    case TransformKind::Box:
        if (tag.j < 2 || tag.j > n)
            throw DomainError("Box: j must lie in 2.." + std::to_string(n) + ", got " + std::to_string(tag.j));
        if (tag.j == n) {
            for (int k = 0; k <= K; ++k) m.values[k] = box_multiplier(n, k);
        } else {
            const auto b = berg_conv_multipliers(n, tag.j, K, opts);
            for (int k = 0; k <= K; ++k) {
                if (k == 1) continue;
                if (b.values[k] == 0.0)
                    throw SingularOperatorError("Box(" + std::to_string(tag.j) + "): BergConv multiplier vanishes at degree " +
                                                std::to_string(k));
                m.values[k] = 1.0 / b.values[k];
            }
        }
        break;
    case TransformKind::BergConv:
        m.values = berg_conv_multipliers(n, tag.j, K, opts).values;
        break;
    case TransformKind::Perp: {
        check_i(n, tag.i, "Perp");
        m.even_only = true;
        const auto e = perp_multipliers(n, tag.i, K / 2);
        for (int k = 0; k <= K; k += 2) m.values[k] = e[k / 2];
        break;
    }
    case TransformKind::Inverse: break;
    }
    return m;
}

bool annihilates_linear(const TransformTag& tag) {
    return tag.kind == TransformKind::Box || tag.kind == TransformKind::BergConv;
}

double condition_of(const MultiplierSeq& m, bool skip_one) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 0; k <= m.band_limit(); ++k) {
        if ((m.even_only && k % 2 == 1) || (skip_one && k == 1)) continue;
        lo = std::min(lo, std::abs(m.values[k]));
        hi = std::max(hi, std::abs(m.values[k]));
    }
    if (hi == 0.0) return 1.0;
    return lo == 0.0 ? std::numeric_limits<double>::infinity() : hi / lo;
}

} // namespace

MultiplierSeq multipliers(const TransformTag& tag, int n, int K, const TransformOptions& opts) {
    check_n(n);
    if (K < 0) throw DomainError("multipliers: band limit must be nonnegative");
    if (tag.kind != TransformKind::Inverse) {
        MultiplierSeq m = base_multipliers(tag, n, K, opts);
        m.condition = condition_of(m, annihilates_linear(tag));
        return m;
    }
    if (!tag.inner) throw DomainError("InverseOf: missing inner transform");
    const MultiplierSeq inner = multipliers(*tag.inner, n, K, opts);
    const bool skip_one = annihilates_linear(*tag.inner);
    MultiplierSeq m = inner;
    m.name = tag.name();
    for (int k = 0; k <= K; ++k) {
        if (inner.even_only && k % 2 == 1) continue;
        if (skip_one && k == 1) {
            m.values[k] = 0.0;
            continue;
        }
        if (inner.values[k] == 0.0 || !std::isfinite(inner.values[k]))
            throw SingularOperatorError(tag.name() + ": multiplier of " + inner.name +
                                        " vanishes at degree " + std::to_string(k));
        m.values[k] = 1.0 / inner.values[k];
    }
    m.condition = inner.condition;
    return m;
}

GrassProfile radon_up(const GrassProfile& p, int j) {
    check_i(p.n, j, "radon_up");
    if (j <= p.i) throw DomainError("radon_up: target dimension must exceed source dimension " + std::to_string(p.i));
    GrassProfile q = p;
    q.i = j;
    q.exact = nullptr;
    return q;
}

GrassProfile radon_down(const GrassProfile& p, int i) {
    check_i(p.n, i, "radon_down");
    if (i >= p.i) throw DomainError("radon_down: target dimension must be below source dimension " + std::to_string(p.i));
    const int kh = static_cast<int>(p.coeffs.size()) - 1;
    auto src = grass_table(p.n, p.i, kh);
    auto dst = grass_table(p.n, i, kh);
    GrassProfile q = p;
    q.i = i;
    q.exact = nullptr;
    for (int k = 0; k <= kh; ++k) q.coeffs[k] *= src->norm_sq[k] / dst->norm_sq[k];
    return q;
}

GrassProfile radon_sphere_kernel(int n, int i, const ZonalProfile& g, int points) {
    check_n(n);
    check_i(n, i, "radon_sphere_kernel");
    if (g.n != n) throw DomainError("radon_sphere_kernel: profile dimension mismatch");
    if (detect_parity(g.coeffs, 1e-12) != Parity::Even)
        throw DomainError("radon_sphere_kernel: generating profile must be even");
    const int kh = g.band_limit() / 2;
    const int d = n - i;
    std::shared_ptr<const QuadratureRule> rule;
    if (d >= 2) rule = sphere_rule(d, points);
    // average over the unit sphere of the (n-i)-dimensional complement
    Kernel avg = [g, rule](double s) {
        const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
        if (!rule) return eval_kernel(g, c);
        double v = 0.0;
        for (std::size_t l = 0; l < rule->size(); ++l) v += rule->weights[l] * eval_kernel(g, c * rule->nodes[l]);
        return v;
    };
    auto t = grass_table(n, i, kh);
    GrassProfile p;
    p.n = n;
    p.i = i;
    p.coeffs.assign(kh + 1, 0.0);
    for (std::size_t l = 0; l < t->s.size(); ++l) {
        const double v = avg(t->s[l]) * t->w[l];
        for (int k = 0; k <= kh; ++k) p.coeffs[k] += v * t->q[l][k];
    }
    for (int k = 0; k <= kh; ++k) p.coeffs[k] /= t->norm_sq[k];
    p.truncation_error = g.truncation_error;
    if (g.exact) p.exact = avg;
    return p;
}

std::vector<double> radon_hyperplane_diag(int n, int i, int kh) {
    check_n(n);
    check_i(n, i, "radon_hyperplane_diag");
    auto hyp = grass_table(n, n - 1, kh);
    auto dst = grass_table(n, i, kh);
    const auto p0 = zonal_basis_all(n, 2 * kh, 0.0);
    std::vector<double> d(kh + 1);
    for (int k = 0; k <= kh; ++k) d[k] = hyp->norm_sq[k] / dst->norm_sq[k] / p0[2 * k];
    return d;
}

double commutation_defect(int n, int i, int j, const GrassProfile& p) {
    check_n(n);
    check_i(n, i, "commutation_defect");
    check_i(n, j, "commutation_defect");
    if (i >= j) throw DomainError("commutation_defect: need i < j");
    if (p.n != n || p.i != i) throw DomainError("commutation_defect: profile must live on Gr_{i,n}");
    const int K = p.band_limit();
    const GrassProfile lhs = radon_up(apply_multiplier(p, multipliers(TransformTag::cosine(i), n, K)), j);
    const GrassProfile rhs =
        scaled(apply_multiplier(radon_up(p, j), multipliers(TransformTag::cosine(j), n, K)), rijci_constant(n, i, j));
    double sup = 0.0;
    for (int l = 0; l <= 200; ++l) {
        const double s = l / 200.0;
        sup = std::max(sup, std::abs(eval_grass(lhs, s) - eval_grass(rhs, s)));
    }
    return sup;
}

GrassProfile perp(const GrassProfile& p) {
    check_n(p.n);
    check_i(p.n, p.i, "perp");
    const int kh = static_cast<int>(p.coeffs.size()) - 1;
    const int target = p.n - p.i;
    auto t = grass_table(p.n, target, kh);
    GrassProfile q;
    q.n = p.n;
    q.i = target;
    q.side = p.side;
    q.coeffs.assign(kh + 1, 0.0);
    for (std::size_t l = 0; l < t->s.size(); ++l) {
        // cos θ_l = √(1 - s_l²) without cancellation
        const double v = eval_grass_kernel(p, t->c[l]) * t->w[l];
        for (int k = 0; k <= kh; ++k) q.coeffs[k] += v * t->q[l][k];
    }
    for (int k = 0; k <= kh; ++k) q.coeffs[k] /= t->norm_sq[k];
    q.truncation_error = p.truncation_error;
    if (p.exact) {
        Kernel f = p.exact;
        q.exact = [f](double s) { return f(std::sqrt(std::max(0.0, 1.0 - s * s))); };
    }
    return q;
}

std::vector<double> perp_multipliers(int n, int i, int kh) {
    check_n(n);
    check_i(n, i, "perp_multipliers");
    auto t = grass_table(n, n - i, kh);
    std::vector<double> e(kh + 1, 0.0);
    for (std::size_t l = 0; l < t->s.size(); ++l) {
        const auto src = grass_basis_values(n, i, kh, t->c[l]);
        for (int k = 0; k <= kh; ++k) e[k] += t->w[l] * src[k] * t->q[l][k];
    }
    for (int k = 0; k <= kh; ++k) e[k] /= t->norm_sq[k];
    return e;
}

} // namespace sphereval
