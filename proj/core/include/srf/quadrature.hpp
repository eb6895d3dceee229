#pragma once

#include "srf/complex.hpp"
#include "srf/errors.hpp"
#include "srf/hp_real.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace srf {

inline constexpr std::size_t kMaxQuadratureNodes = std::size_t{1} << 16;

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<HPReal> nodes;
  std::vector<HPReal> weights;
};

/// n-point rule at the given precision. Rules are cached per (n, bits) and
/// the returned reference stays valid for the life of the process.
const GaussRule& gauss_legendre(std::size_t n, Bits bits);

inline HPReal magnitude(const HPReal& x) { return abs(x); }
inline HPReal magnitude(const HPComplex& z) { return abs(z); }

template <typename V>
struct QuadratureResult {
  V value;
  std::size_t nodes = 0;
  /// sum of w |f|, the scale the stopping rule is measured against
  HPReal abs_integral;
};

/// Integrates f over [a, b] with Gauss-Legendre rules of 8, 16, 32, ...
/// nodes until two successive values agree to reltol relative to
/// max(|I|, sum w|f|). Throws NoConvergence beyond kMaxQuadratureNodes.
template <typename F>
auto integrate_doubling(const F& f, const HPReal& a, const HPReal& b, double reltol, Bits bits,
                        std::size_t start_nodes = 8) -> QuadratureResult<decltype(f(a))> {
  using V = decltype(f(a));
  const HPReal half = (b - a).at_precision(bits) * 0.5;
  const HPReal mid = (a + b).at_precision(bits) * 0.5;
  bool have_previous = false;
  V previous{};
  for (std::size_t n = start_nodes; n <= kMaxQuadratureNodes; n *= 2) {
    const GaussRule& rule = gauss_legendre(n, bits);
    V sum = V(HPReal::zero(bits));
    HPReal abs_sum = HPReal::zero(bits);
    for (std::size_t i = 0; i < n; ++i) {
      const V fx = f(mid + half * rule.nodes[i]);
      sum += fx * rule.weights[i];
      abs_sum += magnitude(fx) * rule.weights[i];
    }
    sum = sum * half;
    abs_sum *= abs(half);
    if (have_previous) {
      const HPReal scale = max(magnitude(sum), abs_sum);
      if (magnitude(sum - previous) <= scale * reltol) return {sum, n, abs_sum};
    }
    previous = sum;
    have_previous = true;
  }
  throw NoConvergence("quadrature did not converge with " + std::to_string(kMaxQuadratureNodes) + " nodes");
}

}  // namespace srf
