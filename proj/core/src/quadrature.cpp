#include "srf/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

namespace srf {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<HPReal, HPReal> legendre(std::size_t n, const HPReal& x) {
  const Bits bits = x.precision();
  HPReal p0 = HPReal::one(bits);
  HPReal p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto kd = static_cast<double>(k);
    HPReal p2 = (x * p1 * (2.0 * kd - 1.0) - p0 * (kd - 1.0)) / kd;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  const HPReal dp = (x * p1 - p0) * static_cast<double>(n) / (x * x - 1.0);
  return {p1, dp};
}

GaussRule build_rule(std::size_t n, Bits bits) {
  GaussRule rule;
  rule.nodes.assign(n, HPReal::zero(bits));
  rule.weights.assign(n, HPReal::zero(bits));
  const Bits work = bits + 32;
  const HPReal eps = ulp_scale(bits + 8);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const double guess =
        std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    HPReal x(guess, work);
    HPReal dp;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(n, x);
      const HPReal dx = p / d;
      x -= dx;
      dp = std::move(d);
      if (abs(dx) <= eps) break;
    }
    dp = legendre(n, x).second;
    const HPReal w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Descending order from +1; mirror into the other half.
    rule.nodes[i] = x.at_precision(bits);
    rule.nodes[n - 1 - i] = -rule.nodes[i];
    rule.weights[i] = w.at_precision(bits);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  if (n % 2 == 1) rule.nodes[n / 2] = HPReal::zero(bits);
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n, Bits bits) {
  if (n == 0 || n > kMaxQuadratureNodes) throw DomainError("unsupported Gauss-Legendre order " + std::to_string(n));
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, Bits>, std::unique_ptr<GaussRule>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, bits});
    if (it != cache.end()) return *it->second;
  }
  auto rule = std::make_unique<GaussRule>(build_rule(n, bits));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::pair{n, bits}, std::move(rule));
  return *it->second;
}

}  // namespace srf
