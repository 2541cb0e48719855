#include "nfcorr/quadrature.hpp"

#include <cmath>
#include <unordered_map>

namespace nfcorr {

void QuadratureSpec::validate() const {
    if (base_order < 4)
        throw std::invalid_argument("quadrature.base_order must be >= 4");
    if (refine_level < 0 || refine_level > 6)
        throw std::invalid_argument("quadrature.refine_level must be in [0, 6]");
    if (!(tolerance > 0.0 && tolerance < 1.0))
        throw std::invalid_argument("quadrature.tolerance must be in (0, 1)");
    if (max_doublings < 1 || max_doublings > 8)
        throw std::invalid_argument("quadrature.max_doublings must be in [1, 8]");
}

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    thread_local std::unordered_map<int, GaussLegendreRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

template <typename T>
T pairwise_impl(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_impl(v.first(half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
    return pairwise_impl(values);
}

double pairwise_sum(std::span<const double> values) {
    return pairwise_impl(values);
}

}  // namespace nfcorr
