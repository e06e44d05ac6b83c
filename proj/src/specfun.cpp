#include "sphereval/specfun.hpp"

#include "sphereval/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

namespace sphereval {

namespace {

constexpr double pi = std::numbers::pi;

// Recurrence coefficients of the monic Jacobi polynomials; b[k] holds the
// off-diagonal entry between rows k-1 and k (b[0] unused).
void jacobi_recurrence(double a, double b, int m, std::vector<double>& diag,
                       std::vector<double>& off) {
    diag.assign(m + 1, 0.0);
    off.assign(m + 1, 0.0);
    const double ab = a + b;
    for (int k = 0; k <= m; ++k) {
        const double s = 2.0 * k + ab;
        if (k == 0) {
            diag[0] = (b - a) / (ab + 2.0);
        } else {
            diag[k] = (b * b - a * a) / (s * (s + 2.0));
        }
        if (k == 1) {
            off[1] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
        } else if (k > 1) {
            off[k] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + ab) /
                               (s * s * (s + 1.0) * (s - 1.0)));
        }
    }
}

struct RuleKey {
    double a, b;
    int m;
    bool operator<(const RuleKey& o) const { return std::tie(a, b, m) < std::tie(o.a, o.b, o.m); }
};

} // namespace

double kappa(int i) {
    if (i < 0) throw DomainError("kappa: index must be nonnegative, got " + std::to_string(i));
    return std::exp(0.5 * i * std::log(pi) - std::lgamma(0.5 * i + 1.0));
}

double kappa_ext(int i) {
    if (i >= 0) return kappa(i);
    const double x = 0.5 * i + 1.0;
    if (x <= 0.0 && std::floor(x) == x) return 0.0;
    return std::pow(pi, 0.5 * i) / std::tgamma(x);
}

double sphere_area(int j) {
    if (j < 0) throw DomainError("sphere_area: dimension must be nonnegative");
    return (j + 1) * kappa(j + 1);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int l = 1; l <= k; ++l) r = r * (n - k + l) / l;
    return std::round(r);
}

double factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    double r = 1.0;
    for (int l = 2; l <= n; ++l) r *= l;
    return r;
}

double harmonic_dim(int n, int k) {
    if (n < 2 || k < 0) throw DomainError("harmonic_dim: need n >= 2 and k >= 0");
    if (n == 2) return k == 0 ? 1.0 : 2.0;
    if (k == 0) return 1.0;
    // (2k+n-2)/(n-2) * C(k+n-3, k)
    return (2.0 * k + n - 2.0) / (n - 2.0) * binomial(k + n - 3, k);
}

void zonal_basis_all(int n, int K, double t, double* out) {
    if (K < 0) return;
    out[0] = 1.0;
    if (K == 0) return;
    out[1] = t;
    const double lam = 0.5 * (n - 2);
    for (int k = 1; k < K; ++k) {
        out[k + 1] = (2.0 * (k + lam) * t * out[k] - k * out[k - 1]) / (k + 2.0 * lam);
    }
}

std::vector<double> zonal_basis_all(int n, int K, double t) {
    std::vector<double> out(std::max(K + 1, 0));
    zonal_basis_all(n, K, t, out.data());
    return out;
}

double legendre_nd(int n, int k, double t) {
    if (n < 3) throw DomainError("legendre_nd: dimension n must be >= 3, got " + std::to_string(n));
    if (k < 0) throw DomainError("legendre_nd: degree must be nonnegative");
    if (!(std::abs(t) <= 1.0)) throw DomainError("legendre_nd: argument must lie in [-1,1]");
    if (k == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    const double lam = 0.5 * (n - 2);
    for (int j = 1; j < k; ++j) {
        const double p2 = (2.0 * (j + lam) * t * p1 - j * p0) / (j + 2.0 * lam);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

QuadratureRule gauss_jacobi(double alpha, double beta, int m) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw DomainError("gauss_jacobi: exponents must exceed -1");
    if (m < 1) throw DomainError("gauss_jacobi: need at least one point");

    std::vector<double> diag, off;
    jacobi_recurrence(alpha, beta, m, diag, off);

    Eigen::VectorXd d(m), e(std::max(m - 1, 0));
    for (int k = 0; k < m; ++k) d[k] = diag[k];
    for (int k = 1; k < m; ++k) e[k - 1] = off[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw QuadratureError("gauss_jacobi: eigenvalue solver failed");

    const double mu0 = std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                                std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
    const double p0 = 1.0 / std::sqrt(mu0);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    // Orthonormal recurrence: off[k+1] p_{k+1} = (x - diag[k]) p_k - off[k] p_{k-1}.
    auto evaluate = [&](double x, double& pm, double& dpm, double& sumsq) {
        double pprev = 0.0, p = p0, dprev = 0.0, dp = 0.0;
        sumsq = p * p;
        for (int k = 0; k < m; ++k) {
            const double pnext = ((x - diag[k]) * p - (k > 0 ? off[k] * pprev : 0.0)) / off[k + 1];
            const double dnext = (p + (x - diag[k]) * dp - (k > 0 ? off[k] * dprev : 0.0)) / off[k + 1];
            pprev = p;
            p = pnext;
            dprev = dp;
            dp = dnext;
            if (k + 1 < m) sumsq += p * p;
        }
        pm = p;
        dpm = dp;
    };

    for (int j = 0; j < m; ++j) {
        double x = solver.eigenvalues()[j];
        double pm, dpm, sumsq;
        for (int it = 0; it < 3; ++it) {
            evaluate(x, pm, dpm, sumsq);
            if (dpm == 0.0) break;
            const double dx = pm / dpm;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        evaluate(x, pm, dpm, sumsq);
        rule.nodes[j] = x;
        rule.weights[j] = 1.0 / sumsq;
    }
    return rule;
}

QuadratureRule gauss_jacobi(double alpha, int m) { return gauss_jacobi(alpha, alpha, m); }

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(double alpha, double beta, int m) {
    static std::mutex mu;
    static std::map<RuleKey, std::shared_ptr<const QuadratureRule>> cache;
    const RuleKey key{alpha, beta, m};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi(alpha, beta, m));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, rule).first->second;
}

QuadratureRule gauss_legendre(int m, double a, double b) {
    auto base = cached_gauss_jacobi(0.0, 0.0, m);
    QuadratureRule r;
    r.nodes.resize(m);
    r.weights.resize(m);
    const double h = 0.5 * (b - a);
    for (int j = 0; j < m; ++j) {
        r.nodes[j] = a + h * (base->nodes[j] + 1.0);
        r.weights[j] = h * base->weights[j];
    }
    return r;
}

std::shared_ptr<const QuadratureRule> sphere_rule(int n, int points) {
    if (n < 2) throw DomainError("sphere_rule: dimension must be >= 2");
    if (points < 2) throw DomainError("sphere_rule: need at least two points");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const QuadratureRule>> cache;
    const auto key = std::make_pair(n, points);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double alpha = 0.5 * (n - 3);
    const int half = points / 2;
    auto base = cached_gauss_jacobi(alpha, 0.0, half);
    const double norm = n == 2 ? 1.0 / pi : sphere_area(n - 2) / sphere_area(n - 1);
    QuadratureRule r;
    r.alpha = alpha;
    r.nodes.resize(2 * half);
    r.weights.resize(2 * half);
    // t = (1+y)/2 on [0,1]: (1-t²)^α dt = 2^{-α-1} (1-y)^α (1+t)^α dy
    const double scale = norm * std::pow(2.0, -alpha - 1.0);
    for (int j = 0; j < half; ++j) {
        const double t = 0.5 * (1.0 + base->nodes[j]);
        const double w = scale * base->weights[j] * std::pow(1.0 + t, alpha);
        r.nodes[half - 1 - j] = -t;
        r.weights[half - 1 - j] = w;
        r.nodes[half + j] = t;
        r.weights[half + j] = w;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::make_shared<const QuadratureRule>(std::move(r))).first->second;
}

std::shared_ptr<const QuadratureRule> sphere_rule_exact(int n, int m) {
    if (n < 2) throw DomainError("sphere_rule_exact: dimension must be >= 2");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const QuadratureRule>> cache;
    const auto key = std::make_pair(n, m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double alpha = 0.5 * (n - 3);
    QuadratureRule r = gauss_jacobi(alpha, m);
    const double norm = n == 2 ? 1.0 / pi : sphere_area(n - 2) / sphere_area(n - 1);
    for (auto& w : r.weights) w *= norm;
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::make_shared<const QuadratureRule>(std::move(r))).first->second;
}

namespace {

std::vector<double> moments(int n, int K, const Kernel& kernel, int points) {
    auto rule = sphere_rule(n, points);
    std::vector<double> out(K + 1, 0.0), basis(K + 1);
    for (std::size_t j = 0; j < rule->size(); ++j) {
        const double t = rule->nodes[j];
        const double f = kernel(t) * rule->weights[j];
        zonal_basis_all(n, K, t, basis.data());
        for (int k = 0; k <= K; ++k) out[k] += f * basis[k];
    }
    return out;
}

} // namespace

std::vector<double> funk_hecke_all(int n, int K, const Kernel& kernel, const FunkHeckeOptions& opts) {
    if (n < 2) throw DomainError("funk_hecke: dimension must be >= 2");
    if (K < 0) throw DomainError("funk_hecke: degree must be nonnegative");
    auto coarse = moments(n, K, kernel, opts.points);
    if (!opts.check) return coarse;
    auto fine = moments(n, K, kernel, 2 * opts.points);
    for (int k = 0; k <= K; ++k) {
        const double diff = std::abs(fine[k] - coarse[k]);
        if (!(diff <= opts.tol * std::max(1.0, std::abs(fine[k])))) {
            throw QuadratureError("funk_hecke: refinement " + std::to_string(opts.points) + " -> " +
                                  std::to_string(2 * opts.points) + " points changed degree " +
                                  std::to_string(k) + " multiplier by " + std::to_string(diff));
        }
    }
    return fine;
}

double funk_hecke(int n, int k, const Kernel& kernel, const FunkHeckeOptions& opts) {
    return funk_hecke_all(n, k, kernel, opts)[k];
}

} // namespace sphereval
