#include "sphereval/constants.hpp"

#include "sphereval/errors.hpp"
#include "sphereval/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sphereval {

namespace {

void require(bool ok, const char* what, int n, int i) {
    if (!ok)
        throw DomainError(std::string(what) + ": index out of range (n=" + std::to_string(n) +
                          ", i=" + std::to_string(i) + ")");
}

} // namespace

double cosine_scale(int n, int i) {
    require(n >= 2 && i >= 1 && i <= n - 1, "cosine_scale", n, i);
    return n * kappa(i) * kappa(n - i) / (2.0 * kappa(n - 1) * binomial(n, i));
}

double rijci_constant(int n, int i, int j) {
    require(i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1, "rijci_constant", n, i);
    return factorial(i) * factorial(n - i) * kappa(i) * kappa(n - i) /
           (factorial(j) * factorial(n - j) * kappa(j) * kappa(n - j));
}

double plain_measure(int n) { return n * kappa(n); }

double crofton_scale(int n, int i) {
    require(i >= 1 && i <= n - 1, "crofton_scale", n, i);
    return 2.0 * kappa(n - 1) / kappa(i);
}

double subspace_mass(int n, int i) {
    require(i >= 0 && i <= n, "subspace_mass", n, i);
    return n * kappa(n - i) / binomial(n, i);
}

double q_ni(int n, int i) {
    require(i >= 2 && i <= n, "q_ni", n, i);
    return (i - 1) / (2.0 * std::numbers::pi * (n + 1 - i)) * kappa(i - 1) * kappa(i - 2) * kappa(n - i) /
           (kappa_ext(i - 3) * kappa(n - 2));
}

double c_ni(int n, int i) {
    require(i >= 1 && i <= n - 2, "c_ni", n, i);
    const double k2 = kappa(n - i - 2);
    const double kn = kappa(n - i);
    return i * (n - i - 1.0) * (n - i + 1.0) * k2 * k2 * kappa(n - i + 1) * kappa(i) /
           (2.0 * (n - i) * (i + 1.0) * kappa_ext(n - i - 3) * kn * kn * kappa(i - 1));
}

double lambda_crofton_constant(int n, int i) {
    require(i >= 2 && i <= n - 1, "lambda_crofton_constant", n, i);
    return i * kappa(i) / kappa(i - 1);
}

double lambda_klain_constant(int n, int i) {
    require(i >= 2 && i <= n - 1, "lambda_klain_constant", n, i);
    return (n - i + 1) * kappa(n - i + 1) / kappa(n - i);
}

double lop_generating_constant(int n, int i) {
    require(i >= 1 && i <= n - 2, "lop_generating_constant", n, i);
    return (n - i) * kappa(i + 1) * kappa(n - i) / (2.0 * kappa(i) * kappa(n - i - 1));
}

double lop_crofton_constant(int n, int i) {
    require(i >= 1 && i <= n - 2, "lop_crofton_constant", n, i);
    return (n - i) * kappa(n - i) / (2.0 * kappa(n - i - 1));
}

double lop_klain_constant(int n, int i) {
    require(i >= 1 && i <= n - 2, "lop_klain_constant", n, i);
    return (i + 1) * kappa(i + 1) / (2.0 * kappa(i));
}

double meansection_recursion_constant(int n, int i) {
    require(i >= 1 && i <= n - 2, "meansection_recursion_constant", n, i);
    return (n - i + 1) * kappa(n - i + 1) / (2.0 * kappa(n - i));
}

double meansection_iterate_constant(int n, int i) {
    require(i >= 0 && i <= n - 2, "meansection_iterate_constant", n, i);
    return factorial(n) * kappa(n) / (std::pow(2.0, i) * factorial(n - i) * kappa(n - i));
}

} // namespace sphereval
