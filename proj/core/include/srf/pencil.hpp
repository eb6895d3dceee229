#pragma once

// Exact auxiliary matrices for the small-y limit of the Gram matrix: the
// Hilbert matrix of monomial moments, the last row of the inverse Vandermonde
// matrix of the offsets, and the rank-one limiting pencil H_n - mu c_n m m^T.

#include "srf/hp_real.hpp"
#include "srf/matrix.hpp"
#include "srf/support.hpp"

#include <gmpxx.h>

#include <vector>

namespace srf {

using Rational = mpq_class;

/// Largest order kept in exact rational arithmetic.
inline constexpr int kMaxExactHilbertOrder = 12;

/// (n+1) x (n+1) matrix with H(i, j) = 1/(i + j + 1). Requires 0 <= n <= 12.
Matrix<Rational> hilbert_matrix(int n);

/// Gauss-Jordan inverse over the rationals. Throws SingularSystem.
Matrix<Rational> exact_inverse(const Matrix<Rational>& m);

/// Solves sum_j m_j tau_j^i = delta_{i,n} (i = 0..n) exactly.
/// Throws SingularSystem on duplicate offsets.
std::vector<Rational> vandermonde_lastrow_exact(const std::vector<long>& offsets);
std::vector<HPReal> vandermonde_lastrow(const SupportSet& support, Bits bits);

/// prod_{i != j} 1 / |tau_i - tau_j|; the magnitudes of the last row.
std::vector<Rational> vieta_magnitudes(const std::vector<long>& offsets);

struct PencilData {
  int n = 0;
  Matrix<Rational> hilbert;
  Matrix<Rational> hilbert_inverse;
  std::vector<Rational> m_exact;
  std::vector<HPReal> m;
  Rational quadratic_form;  ///< m^T H^-1 m, exact
  HPReal c_n;               ///< (2 pi)^{2n} / (n!)^2
  HPReal mu;                ///< 1 / (c_n m^T H^-1 m)
  /// c_n / ((H^-1)_{nn} |m|^2), the limit of y^{-2n} lambda_min(G_T) as y -> 0.
  HPReal limit_mu;
};

/// The finite generalized eigenvalue of the rank-one pencil. Needs |T| >= 2.
PencilData pencil_mu(const SupportSet& support, Bits bits);

HPReal to_hp(const Rational& q, Bits bits);

}  // namespace srf
