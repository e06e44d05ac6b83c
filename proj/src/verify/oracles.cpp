#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphereval::oracle {

namespace {

constexpr double pi = std::numbers::pi;

long double omega(int j) { return (j + 1) * kappa(j + 1); }

long double beta(long double a, long double b) { return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b); }

double tanh_sinh(const Fn& f, double a, double b) {
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, 1e-13);
}

} // namespace

long double kappa(int i) {
    const long double h = 0.5L * i;
    return std::pow(std::numbers::pi_v<long double>, h) / std::tgamma(h + 1.0L);
}

double legendre(int n, int k, double t) {
    const double lambda = 0.5 * (n - 2);
    return boost::math::gegenbauer(static_cast<unsigned>(k), lambda, t) /
           boost::math::gegenbauer(static_cast<unsigned>(k), lambda, 1.0);
}

double cosine_c1(int n, int k) {
    if (k % 2) return 0.0;
    const long double lambda = 0.5L * (n - 2);
    long double sum = 0.0L;
    for (int m = 0; 2 * m <= k; ++m) {
        const int p = k - 2 * m;
        const long double coef = (m % 2 ? -1.0L : 1.0L) * std::tgamma(k - m + lambda) /
                                 (std::tgamma(lambda) * std::tgamma(m + 1.0L) * std::tgamma(p + 1.0L)) *
                                 std::pow(2.0L, p);
        sum += coef * 0.5L * beta(0.5L * (p + 2), 0.5L * (n - 1));
    }
    const long double norm = std::tgamma(k + 2.0L * lambda) / (std::tgamma(2.0L * lambda) * std::tgamma(k + 1.0L));
    return static_cast<double>(omega(n - 2) / omega(n - 1) * 2.0L * sum / norm);
}

double cosine_ci(int n, int i, int k) {
    long double binom = std::tgamma(n + 1.0L) / (std::tgamma(i + 1.0L) * std::tgamma(n - i + 1.0L));
    const long double scale = n * kappa(i) * kappa(n - i) / (2.0L * kappa(n - 1) * binom);
    return static_cast<double>(scale * cosine_c1(n, k));
}

double berg_zeta(int j, double phi) {
    const double t = std::cos(phi);
    const double half = std::sin(0.5 * phi);
    const double one_minus_t = 2.0 * half * half;
    const double ln2 = std::numbers::ln2;
    const double log_one_minus_t = ln2 + 2.0 * std::log(half);
    switch (j) {
    case 2: return -0.5 * t + (pi - phi) * std::sin(phi);
    case 3: return 2.0 + 2.0 * t * log_one_minus_t + 2.0 * (4.0 / 3.0 - ln2) * t;
    case 4: return 1.5 * (phi - pi) * std::cos(2.0 * phi) / std::sin(phi) + 0.75 * t;
    case 5:
        return 4.0 * t * (3.0 * log_one_minus_t + 1.0) / 3.0 - 4.0 * (3.0 * t - 2.0) / (3.0 * one_minus_t) +
               4.0 * (23.0 / 15.0 - ln2) * t;
    default: throw std::invalid_argument("oracle::berg_zeta: closed form only for j = 2..5");
    }
}

double berg_multiplier(int n, int j, int k) {
    const Fn f = [n, j, k](double phi) {
        const double w = std::pow(std::sin(phi), n - 2);
        const double v = berg_zeta(j, phi) * w;
        // the weighted integrand vanishes at both ends; only overflow can occur there
        return std::isfinite(v) ? v * legendre(n, k, std::cos(phi)) : 0.0;
    };
    return static_cast<double>(omega(n - 2) / omega(j - 1)) * tanh_sinh(f, 0.0, pi);
}

double radon_ij(const Fn& f, int i, int j, double s) {
    const Fn g = [&](double th) {
        return f(s * std::sin(th)) * std::pow(std::sin(th), i - 1) * std::pow(std::cos(th), j - i - 1);
    };
    return 2.0 / static_cast<double>(beta(0.5L * i, 0.5L * (j - i))) * tanh_sinh(g, 0.0, 0.5 * pi);
}

double haar_s(int n, int i, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd G(n, i);
    for (int c = 0; c < i; ++c)
        for (int r = 0; r < n; ++r) G(r, c) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, i);
    return Q.row(0).norm();
}

double ball_intrinsic_volume(int n, int i, double r) {
    const long double binom = std::tgamma(n + 1.0L) / (std::tgamma(i + 1.0L) * std::tgamma(n - i + 1.0L));
    return static_cast<double>(binom * kappa(n) / kappa(n - i) * std::pow(static_cast<long double>(r), i));
}

double box_intrinsic_volume(const std::vector<double>& a, int i) {
    std::vector<double> e(a.size() + 1, 0.0);
    e[0] = 1.0;
    for (double x : a)
        for (std::size_t m = a.size(); m >= 1; --m) e[m] += x * e[m - 1];
    return e.at(i);
}

double sausage_pair(double t, const Fn& g, const Eigen::Vector3d& u) {
    using Gauss = boost::math::quadrature::gauss<double, 30>;
    const double h = 0.5 * pi;
    double faces = 0.0;
    for (int a = 0; a < 3; ++a) faces += g(u[a]) + g(-u[a]);
    double edges = 0.0;
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3, c = (a + 2) % 3;
        for (double sb : {-1.0, 1.0})
            for (double sc : {-1.0, 1.0}) {
                auto f = [&](double phi) { return g(sb * u[b] * std::cos(phi) + sc * u[c] * std::sin(phi)); };
                edges += Gauss::integrate(f, 0.0, h);
            }
    }
    double corners = 0.0;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0})
            for (double s3 : {-1.0, 1.0}) {
                auto outer = [&](double th) {
                    auto inner = [&](double ph) {
                        const double x = s1 * std::sin(th) * std::cos(ph), y = s2 * std::sin(th) * std::sin(ph),
                                     z = s3 * std::cos(th);
                        return g(u[0] * x + u[1] * y + u[2] * z);
                    };
                    return std::sin(th) * Gauss::integrate(inner, 0.0, h);
                };
                corners += Gauss::integrate(outer, 0.0, h);
            }
    return faces + t * edges + t * t * corners;
}

double mean_section_width(const std::vector<Eigen::Vector3d>& vertices, const Eigen::Vector3d& w) {
    const Eigen::Vector3d wn = w.normalized();
    const Eigen::Vector3d a = wn.unitOrthogonal();
    const Eigen::Vector3d b = wn.cross(a);
    // breakpoints: directions where two vertices have equal projection
    std::vector<double> cuts{0.0, pi};
    for (std::size_t p = 0; p < vertices.size(); ++p)
        for (std::size_t q = p + 1; q < vertices.size(); ++q) {
            const Eigen::Vector3d d = vertices[p] - vertices[q];
            double alpha = std::atan2(-a.dot(d), b.dot(d));
            if (alpha < 0.0) alpha += pi;
            if (alpha > 0.0 && alpha < pi) cuts.push_back(alpha);
        }
    std::sort(cuts.begin(), cuts.end());
    double I = 0.0;
    for (std::size_t m = 0; m + 1 < cuts.size(); ++m) {
        const double lo = cuts[m], hi = cuts[m + 1];
        if (hi - lo <= 0.0) continue;
        const double mid = 0.5 * (lo + hi);
        const Eigen::Vector3d l = std::cos(mid) * a + std::sin(mid) * b;
        std::size_t top = 0, bot = 0;
        for (std::size_t v = 1; v < vertices.size(); ++v) {
            if (l.dot(vertices[v]) > l.dot(vertices[top])) top = v;
            if (l.dot(vertices[v]) < l.dot(vertices[bot])) bot = v;
        }
        const Eigen::Vector3d d = vertices[top] - vertices[bot];
        const double A = a.dot(d), B = b.dot(d);
        I += A * (std::sin(hi) - std::sin(lo)) - B * (std::cos(hi) - std::cos(lo));
    }
    return I / pi;
}

double cube_mean_section_width(const Eigen::Vector3d& w) {
    const Eigen::Vector3d wn = w.normalized();
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += std::sqrt(std::max(0.0, 1.0 - wn[k] * wn[k]));
    return 2.0 / pi * s;
}

} // namespace sphereval::oracle
