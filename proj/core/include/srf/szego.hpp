#pragma once

// Conformal maps of the arc exterior, the Szego kernel, orthonormal
// polynomials on the arc, Faber polynomials and the inequalities they obey.

#include "srf/bound_check.hpp"
#include "srf/complex.hpp"
#include "srf/hp_real.hpp"
#include "srf/laurent.hpp"
#include "srf/matrix.hpp"
#include "srf/quadrature.hpp"
#include "srf/system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace srf {

/// The arc {e^{i theta} : |theta| <= pi y}.
struct ArcGeometry {
  SystemParams params;
  HPReal half_angle;      ///< pi y
  HPReal total_rotation;  ///< V = 2 pi (1 + 2y)

  static ArcGeometry from(const SystemParams& params);
  /// e^{i pi y} for sign > 0, e^{-i pi y} otherwise.
  HPComplex endpoint(int sign) const;
};

/// phi(w) = w (c w + 1) / (w + c). Throws PoleError at w = -c.
HPComplex phi_map(const HPReal& c, const HPComplex& w);
/// phi'(w) = c (w^2 + 2 c w + 1) / (w + c)^2.
HPComplex phi_prime(const HPReal& c, const HPComplex& w);

/// Root of c w^2 + (1 - z) w - z c = 0 with |w| > 1. Throws OnArcError when
/// |w| is within 1e-12 of 1.
HPComplex Phi_map(const HPReal& c, const HPComplex& z);
/// Phi'(z) = 1 / phi'(Phi(z)).
HPComplex Phi_prime(const HPReal& c, const HPComplex& z);

/// Branch of Phi'^{1/2} analytic off the arc with value c^{-1/2} at infinity,
/// written in terms of w = Phi(z).
HPComplex sqrt_Phi_prime_at(const HPReal& c, const HPComplex& w);
HPComplex sqrt_Phi_prime(const HPReal& c, const HPComplex& z);

/// A point of the extended exterior; std::nullopt is the point at infinity.
using ExteriorPoint = std::optional<HPComplex>;

/// K(zeta, z) = (L/pi) Phi'(zeta)^{1/2} conj(Phi'(z)^{1/2}) A/(A - 1) with
/// A = Phi(zeta) conj(Phi(z)). Throws DegeneracyError when |A - 1| < 1e-30.
HPComplex szego_kernel(const SystemParams& params, const ExteriorPoint& zeta, const ExteriorPoint& z);

/// A function analytic off the arc, given through its boundary values as a
/// function of w = Phi(zeta) on |w| = 1.
using BoundaryFunction = std::function<HPComplex(const HPComplex& w)>;

/// (1/L) int_Gamma F(zeta) conj(K(zeta, z)) |d zeta|, the reproducing
/// integral. Evaluated over |w| = 1 (both sides of the arc), split at the two
/// critical points of phi with a cosine change of variable on each panel.
QuadratureResult<HPComplex> reproduce(const SystemParams& params, const BoundaryFunction& f,
                                      const ExteriorPoint& z, double reltol, Bits bits);

/// Orthonormal polynomials on the arc from the Cholesky factor of the
/// monomial Gram matrix.
struct OrthoPolyTable {
  int n_max = 0;
  std::vector<HPReal> k_values;       ///< k_n = 1 / L_nn
  std::vector<HPReal> cholesky_diag;  ///< L_nn
  Matrix<HPReal> lower;               ///< L, G = L L^T
  Matrix<HPReal> coefficients;        ///< row n: ascending coefficients of p_n (L^-1)
};

/// Throws NotPositiveDefinite with the pivot (the degree where precision ran out).
OrthoPolyTable leading_coeffs(const SystemParams& params, int n_max, Bits bits);

/// <f, g> = (1/L) int_{-pi y}^{pi y} f(e^{i theta}) conj(g(e^{i theta})) d theta by
/// Gauss-Legendre with node doubling to relative 1e-13.
QuadratureResult<HPComplex> arc_inner_product(const std::vector<HPComplex>& f, const std::vector<HPComplex>& g,
                                              const SystemParams& params, Bits bits, std::size_t start_nodes = 8,
                                              double reltol = 1e-13);

/// Polynomial part of Phi(z)^n, ascending. Requires truncation >= n + 10.
/// Throws TruncationError if the tail estimate reaches the constant term.
std::vector<HPComplex> faber_poly(const SystemParams& params, int n, long truncation, Bits bits);

struct TrendRow {
  int n = 0;
  HPReal k_inv_sq;  ///< k_n^-2
  HPReal ratio;     ///< k_n^-2 / ((c/y) c^{2n})
};

struct SzegoSuite {
  std::vector<BoundCheck> checks;
  std::vector<TrendRow> trend;
  /// Sample counts behind the sampled checks.
  std::size_t polynomials = 0;
  std::size_t exterior_points = 0;
};

struct SuiteOptions {
  int n_max = 6;
  std::size_t arc_samples = 1000;   ///< points on the arc for the Faber maximum
  std::size_t polynomials = 100;    ///< random unit polynomials per degree
  std::size_t points = 20;          ///< sample points per polynomial and region
  std::uint64_t seed = 1;
  Bits bits = 256;
};

/// Bracket on k_n^-2, Faber maximum, exterior and banana growth bounds, the
/// Phi' bound and the asymptotic trend of k_n^-2. Never throws on a failed
/// check; failures are recorded.
SzegoSuite bound_suite(const SystemParams& params, const SuiteOptions& options);

}  // namespace srf
