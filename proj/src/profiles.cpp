#include "sphereval/profiles.hpp"

#include "sphereval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace sphereval {

std::string to_string(Parity p) {
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "mixed";
    }
}

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "mixed") return Parity::Mixed;
    throw DomainError("unknown parity '" + s + "' (expected even|odd|mixed)");
}

Parity detect_parity(const std::vector<double>& coeffs, double tol) {
    double even = 0.0, odd = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        (k % 2 == 0 ? even : odd) = std::max(k % 2 == 0 ? even : odd, std::abs(coeffs[k]));
    }
    const double scale = std::max(even, odd);
    const double cut = tol * scale;
    if (odd <= cut) return Parity::Even;
    if (even <= cut) return Parity::Odd;
    return Parity::Mixed;
}

ZonalProfile make_zonal(int n, std::vector<double> coeffs) {
    if (n < 2) throw DomainError("zonal profile: dimension must be >= 2");
    if (coeffs.empty()) throw DomainError("zonal profile: empty coefficient list");
    ZonalProfile p;
    p.n = n;
    p.coeffs = std::move(coeffs);
    p.parity = detect_parity(p.coeffs);
    return p;
}

double eval_zonal(const ZonalProfile& p, double t) {
    if (!(std::abs(t) <= 1.0)) throw DomainError("eval_zonal: argument must lie in [-1,1]");
    const int K = p.band_limit();
    std::vector<double> basis(K + 1);
    zonal_basis_all(p.n, K, t, basis.data());
    double s = 0.0;
    for (int k = 0; k <= K; ++k) s += p.coeffs[k] * basis[k];
    return s;
}

double eval_kernel(const ZonalProfile& p, double t) {
    if (p.exact) return p.exact(t);
    if (p.abel == 1.0) return eval_zonal(p, t);
    const int K = p.band_limit();
    std::vector<double> basis(K + 1);
    zonal_basis_all(p.n, K, t, basis.data());
    double s = 0.0, r = 1.0;
    for (int k = 0; k <= K; ++k, r *= p.abel) s += r * p.coeffs[k] * basis[k];
    return s;
}

namespace {

double tail_ratio(const std::vector<double>& c) {
    double mx = 0.0;
    for (double v : c) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return 0.0;
    double last = std::abs(c.back());
    if (c.size() >= 2) last = std::max(last, std::abs(c[c.size() - 2]));
    return last / mx;
}

} // namespace

ZonalProfile expand_zonal(int n, const Kernel& f, int K, const ExpandOptions& opts) {
    if (K < 0) throw DomainError("expand_zonal: band limit must be nonnegative");
    FunkHeckeOptions fh;
    fh.points = opts.points > 0 ? opts.points : std::max(128, 2 * K + 64);
    fh.check = false;
    auto m = funk_hecke_all(n, K, f, fh);
    for (int k = 0; k <= K; ++k) m[k] *= harmonic_dim(n, k);
    const double mx = [&] {
        double v = 0.0;
        for (double x : m) v = std::max(v, std::abs(x));
        return v;
    }();
    // quadrature noise on the absent parity is zeroed
    const Parity par = detect_parity(m, 1e-13);
    for (int k = 0; k <= K; ++k) {
        if ((par == Parity::Even && k % 2 == 1) || (par == Parity::Odd && k % 2 == 0)) m[k] = 0.0;
        else if (std::abs(m[k]) < 1e-15 * mx) m[k] = 0.0;
    }
    ZonalProfile p;
    p.n = n;
    p.coeffs = std::move(m);
    p.parity = par;
    p.truncation_error = tail_ratio(p.coeffs);
    p.exact = f;
    return p;
}

ZonalProfile even_part(const ZonalProfile& p) {
    ZonalProfile q = p;
    for (std::size_t k = 1; k < q.coeffs.size(); k += 2) q.coeffs[k] = 0.0;
    q.parity = Parity::Even;
    if (p.exact) {
        Kernel f = p.exact;
        q.exact = [f](double t) { return 0.5 * (f(t) + f(-t)); };
    }
    return q;
}

ZonalProfile scaled(const ZonalProfile& p, double c) {
    ZonalProfile q = p;
    for (auto& a : q.coeffs) a *= c;
    if (p.exact) {
        Kernel f = p.exact;
        q.exact = [f, c](double t) { return c * f(t); };
    }
    return q;
}

bool tail_warning(const ZonalProfile& p) { return tail_ratio(p.coeffs) > 1e-6; }
bool tail_warning(const GrassProfile& p) {
    if (p.coeffs.empty()) return false;
    double mx = 0.0;
    for (double v : p.coeffs) mx = std::max(mx, std::abs(v));
    return mx > 0.0 && std::abs(p.coeffs.back()) / mx > 1e-6;
}

namespace {

void check_grass_args(int n, int i) {
    if (n < 3) throw DomainError("Grassmannian profile: dimension n must be >= 3");
    if (i < 1 || i > n - 1)
        throw DomainError("Grassmannian profile: subspace dimension i must lie in 1.." +
                          std::to_string(n - 1) + ", got " + std::to_string(i));
}

// q^{(i)}_{2k}(s) for k = 0..kh into out.
void q_values(int n, int i, int kh, double s, double* out, std::vector<double>& scratch) {
    const int K = 2 * kh;
    scratch.resize(K + 1);
    if (i == 1) {
        zonal_basis_all(n, K, s, scratch.data());
        for (int k = 0; k <= kh; ++k) out[k] = scratch[2 * k];
        return;
    }
    auto rule = sphere_rule_exact(i, kh + 2);
    std::fill(out, out + kh + 1, 0.0);
    for (std::size_t j = 0; j < rule->size(); ++j) {
        zonal_basis_all(n, K, s * rule->nodes[j], scratch.data());
        const double w = rule->weights[j];
        for (int k = 0; k <= kh; ++k) out[k] += w * scratch[2 * k];
    }
}

} // namespace

std::shared_ptr<const GrassTable> grass_table(int n, int i, int kh) {
    check_grass_args(n, i);
    if (kh < 0) throw DomainError("grass_table: negative degree index");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const GrassTable>> cache;
    const auto key = std::make_tuple(n, i, kh);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<GrassTable>();
    t->n = n;
    t->i = i;
    t->kh = kh;
    const int M = std::max(96, 4 * kh + 32);
    const QuadratureRule gl = gauss_legendre(M, 0.0, 0.5 * std::numbers::pi);
    t->s.resize(M);
    t->c.resize(M);
    t->w.resize(M);
    double total = 0.0;
    for (int l = 0; l < M; ++l) {
        const double th = gl.nodes[l];
        t->s[l] = std::sin(th);
        t->c[l] = std::cos(th);
        t->w[l] = gl.weights[l] * std::pow(t->s[l], i - 1) * std::pow(t->c[l], n - i - 1);
        total += t->w[l];
    }
    for (auto& w : t->w) w /= total;
    t->q.assign(M, std::vector<double>(kh + 1));
    std::vector<double> scratch;
    for (int l = 0; l < M; ++l) q_values(n, i, kh, t->s[l], t->q[l].data(), scratch);
    t->norm_sq.assign(kh + 1, 0.0);
    for (int l = 0; l < M; ++l)
        for (int k = 0; k <= kh; ++k) t->norm_sq[k] += t->w[l] * t->q[l][k] * t->q[l][k];
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(t)).first->second;
}

std::vector<double> grass_basis_values(int n, int i, int kh, double s) {
    check_grass_args(n, i);
    std::vector<double> out(kh + 1), scratch;
    q_values(n, i, kh, s, out.data(), scratch);
    return out;
}

double grass_basis_q(int n, int i, int k, double s) { return grass_basis_values(n, i, k, s)[k]; }

Kernel grass_basis_function(int n, int i, int k) {
    check_grass_args(n, i);
    return [n, i, k](double s) { return grass_basis_q(n, i, k, s); };
}

double grass_norm_sq(int n, int i, int k) { return grass_table(n, i, k)->norm_sq[k]; }

GrassProfile expand_grass(int n, int i, const Kernel& f, int K, Side side) {
    check_grass_args(n, i);
    const int kh = K / 2;
    auto t = grass_table(n, i, kh);
    GrassProfile p;
    p.n = n;
    p.i = i;
    p.side = side;
    p.coeffs.assign(kh + 1, 0.0);
    for (std::size_t l = 0; l < t->s.size(); ++l) {
        const double v = f(t->s[l]) * t->w[l];
        for (int k = 0; k <= kh; ++k) p.coeffs[k] += v * t->q[l][k];
    }
    for (int k = 0; k <= kh; ++k) p.coeffs[k] /= t->norm_sq[k];
    p.exact = f;
    double mx = 0.0;
    for (double v : p.coeffs) mx = std::max(mx, std::abs(v));
    p.truncation_error = mx > 0.0 ? std::abs(p.coeffs.back()) / mx : 0.0;
    return p;
}

double eval_grass(const GrassProfile& p, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("eval_grass: parameter must lie in [0,1]");
    const int kh = static_cast<int>(p.coeffs.size()) - 1;
    const auto q = grass_basis_values(p.n, p.i, kh, s);
    double v = 0.0;
    for (int k = 0; k <= kh; ++k) v += p.coeffs[k] * q[k];
    return v;
}

double eval_grass_kernel(const GrassProfile& p, double s) {
    if (p.exact) return p.exact(s);
    return eval_grass(p, s);
}

GrassProfile hat_dual(const GrassProfile& p) {
    GrassProfile q = p;
    q.side = p.side == Side::Grassmannian ? Side::Sphere : Side::Grassmannian;
    return q;
}

GrassProfile zonal_to_hyperplane(const ZonalProfile& g) {
    if (g.n < 3) throw DomainError("zonal_to_hyperplane: dimension must be >= 3");
    if (detect_parity(g.coeffs, 1e-12) != Parity::Even)
        throw DomainError("zonal_to_hyperplane: profile must be even (hyperplane <-> ±normal)");
    const int kh = g.band_limit() / 2;
    const auto p0 = zonal_basis_all(g.n, 2 * kh, 0.0);
    GrassProfile p;
    p.n = g.n;
    p.i = g.n - 1;
    p.coeffs.resize(kh + 1);
    for (int k = 0; k <= kh; ++k) p.coeffs[k] = g.coeffs[2 * k] / p0[2 * k];
    p.truncation_error = g.truncation_error;
    if (g.exact) {
        Kernel f = g.exact;
        p.exact = [f](double s) { return f(std::sqrt(std::max(0.0, 1.0 - s * s))); };
    }
    return p;
}

ZonalProfile hyperplane_to_zonal(const GrassProfile& p) {
    if (p.i != p.n - 1) throw DomainError("hyperplane_to_zonal: profile must live on Gr_{n-1,n}");
    const int kh = static_cast<int>(p.coeffs.size()) - 1;
    const auto p0 = zonal_basis_all(p.n, 2 * kh, 0.0);
    std::vector<double> a(2 * kh + 1, 0.0);
    for (int k = 0; k <= kh; ++k) a[2 * k] = p.coeffs[k] * p0[2 * k];
    ZonalProfile g = make_zonal(p.n, std::move(a));
    g.parity = Parity::Even;
    g.truncation_error = p.truncation_error;
    return g;
}

GrassProfile scaled(const GrassProfile& p, double c) {
    GrassProfile q = p;
    for (auto& b : q.coeffs) b *= c;
    if (p.exact) {
        Kernel f = p.exact;
        q.exact = [f, c](double s) { return c * f(s); };
    }
    return q;
}

ZonalProfile apply_multiplier(const ZonalProfile& p, const MultiplierSeq& m) {
    if (m.n != p.n) throw DomainError("apply_multiplier: dimension mismatch (" + m.name + ")");
    if (m.band_limit() < p.band_limit())
        throw DomainError("apply_multiplier: multiplier band limit " + std::to_string(m.band_limit()) +
                          " below profile band limit " + std::to_string(p.band_limit()));
    ZonalProfile q;
    q.n = p.n;
    q.coeffs.resize(p.coeffs.size());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (m.even_only && k % 2 == 1) {
            if (p.coeffs[k] != 0.0)
                throw DomainError("apply_multiplier: " + m.name + " acts on even degrees only");
            q.coeffs[k] = 0.0;
            continue;
        }
        q.coeffs[k] = p.coeffs[k] * m.values[k];
    }
    q.parity = p.parity;
    q.truncation_error = p.truncation_error;
    return q;
}

GrassProfile apply_multiplier(const GrassProfile& p, const MultiplierSeq& m) {
    if (m.n != p.n) throw DomainError("apply_multiplier: dimension mismatch (" + m.name + ")");
    if (m.band_limit() < p.band_limit())
        throw DomainError("apply_multiplier: multiplier band limit " + std::to_string(m.band_limit()) +
                          " below profile band limit " + std::to_string(p.band_limit()));
    GrassProfile q = p;
    q.exact = nullptr;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) q.coeffs[k] = p.coeffs[k] * m.values[2 * k];
    return q;
}

double coeff_distance(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = std::max(a.size(), b.size());
    double d = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = k < a.size() ? a[k] : 0.0;
        const double y = k < b.size() ? b[k] : 0.0;
        d = std::max(d, std::abs(x - y));
    }
    return d;
}

} // namespace sphereval
