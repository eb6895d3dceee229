#pragma once

// Normalized partial Fourier system: atoms a_j(theta) = e^{i j theta} / sqrt(2 pi y)
// on theta in [-pi y, pi y], their Gram matrices, and the coefficient-space
// measurement model.

#include "srf/complex.hpp"
#include "srf/hp_real.hpp"
#include "srf/matrix.hpp"
#include "srf/support.hpp"

#include <span>
#include <vector>

namespace srf {

/// The normalized problem. y is the band fraction (1/SRF), strictly inside (0, 1/2).
class SystemParams {
 public:
  /// Precision of the parameters is y.precision().
  static SystemParams from_y(const HPReal& y);
  static SystemParams from_srf(const HPReal& srf);

  const HPReal& y() const { return y_; }
  const HPReal& srf() const { return srf_; }
  /// c = sin(pi y / 2)
  const HPReal& capacity() const { return capacity_; }
  /// L = 2 pi y
  const HPReal& arc_length() const { return arc_length_; }
  Bits bits() const { return y_.precision(); }

  /// Same y, derived quantities recomputed at a new precision.
  SystemParams at_precision(Bits bits) const;

 private:
  explicit SystemParams(HPReal y);

  HPReal y_;
  HPReal srf_;
  HPReal capacity_;
  HPReal arc_length_;
};

/// sin(pi y / 2). Throws DomainError unless 0 < y < 1/2.
HPReal capacity(const HPReal& y, Bits bits);

/// sinc(pi y m) = <a_{j+m}, a_j>; 1 at m = 0, even in m.
HPReal gram_entry(const SystemParams& params, long m, Bits bits);

struct GramMatrix {
  SupportSet support;
  Matrix<HPReal> entries;

  std::size_t order() const { return support.size(); }
};

/// Entry (i, j) = gram_entry(tau_j - tau_i). Requires a nonempty support.
GramMatrix build_gram(const SystemParams& params, const SupportSet& support, Bits bits);

/// Gram matrix between two supports: entry (i, j) = <a_{cols_j}, a_{rows_i}>.
Matrix<HPReal> cross_gram(const SystemParams& params, const SupportSet& rows, const SupportSet& cols,
                          Bits bits);

struct CoefficientVector {
  SupportSet support;
  std::vector<HPComplex> values;

  CoefficientVector() = default;
  CoefficientVector(SupportSet s, std::vector<HPComplex> v);
  /// Real coefficients convenience.
  static CoefficientVector real(SupportSet s, const std::vector<HPReal>& v);

  std::size_t sparsity() const;
  /// Plain coefficient l2 norm.
  HPReal l2_norm(Bits bits) const;
  /// Values re-indexed on a superset window, zero-padded.
  std::vector<HPComplex> embedded(const SupportSet& window, Bits bits) const;
};

/// A function on [-pi y, pi y] stored as coefficients over a finite window of
/// atoms plus the norm of its component orthogonal to that span.
struct MeasurementVector {
  SupportSet window;
  std::vector<HPComplex> coeffs;
  HPReal rho;
};

MeasurementVector synthesize(const SystemParams& params, const CoefficientVector& x,
                             const SupportSet& window);

/// sqrt(coeffs* G_W coeffs + rho^2).
HPReal measurement_norm(const SystemParams& params, const MeasurementVector& f, Bits bits);

/// Re(x* G x) for Hermitian-real G.
HPReal quadratic_form(const Matrix<HPReal>& g, std::span<const HPComplex> x);

/// x - y elementwise over the same window.
std::vector<HPComplex> difference(std::span<const HPComplex> x, std::span<const HPComplex> y);

}  // namespace srf
