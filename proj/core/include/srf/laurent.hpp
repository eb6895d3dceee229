#pragma once

#include "srf/complex.hpp"
#include "srf/hp_real.hpp"

#include <vector>

namespace srf {

/// Truncated Laurent series sum_{d = low}^{top} a_d z^d.
///
/// Coefficients below low_degree() were dropped; truncation_bound() estimates
/// the magnitude of the first dropped coefficient. Products keep only the
/// degrees that are exact given both operands' truncation.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  /// coefficients[i] multiplies z^(top_degree - i). An exact series has no
  /// terms below its last coefficient (a Laurent polynomial).
  LaurentSeries(long top_degree, std::vector<HPComplex> coefficients, HPReal truncation_bound,
                bool exact = false);

  long top_degree() const { return top_; }
  long low_degree() const { return top_ - static_cast<long>(coeffs_.size()) + 1; }
  const std::vector<HPComplex>& coefficients() const { return coeffs_; }
  const HPReal& truncation_bound() const { return tail_; }
  Bits bits() const { return tail_.precision(); }
  bool exact() const { return exact_; }

  /// Zero outside [low_degree, top_degree].
  HPComplex coefficient(long degree) const;

  /// Coefficients of degrees 0..top_degree, ascending. Requires low_degree <= 0.
  std::vector<HPComplex> polynomial_part() const;

  /// Sum of the retained terms at z != 0.
  HPComplex evaluate(const HPComplex& z) const;

  /// Sum of |a_d| over retained terms.
  HPReal abs_sum() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  long top_ = 0;
  std::vector<HPComplex> coeffs_;
  HPReal tail_;
  bool exact_ = false;
};

/// a^n by repeated multiplication, n >= 0.
LaurentSeries pow(const LaurentSeries& a, long n);

/// Exterior map Phi(z) = z/c + (c^2 - 1)/c + sum_{k>=1} delta_k z^-k, kept to
/// degree -truncation.
LaurentSeries exterior_map_series(const HPReal& c, long truncation);

/// phi(w) = c w + (1 - c^2) + sum_{k>=1} (1 - c^2)(-c)^k w^-k, to degree -truncation.
LaurentSeries interior_map_series(const HPReal& c, long truncation);

/// Ascending-coefficient polynomial evaluation.
HPComplex poly_eval(const std::vector<HPComplex>& ascending, const HPComplex& z);

}  // namespace srf
