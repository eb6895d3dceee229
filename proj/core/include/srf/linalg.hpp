#pragma once

#include "srf/complex.hpp"
#include "srf/hp_real.hpp"
#include "srf/matrix.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace srf {

/// Lower-triangular L with L L^T = M. Throws NotPositiveDefinite carrying the
/// index of the first non-positive pivot.
Matrix<HPReal> hp_cholesky(const Matrix<HPReal>& m, Bits bits);

/// Solves (L L^T) x = b given the Cholesky factor.
std::vector<HPReal> cholesky_solve(const Matrix<HPReal>& lower, std::span<const HPReal> b);
std::vector<HPComplex> cholesky_solve(const Matrix<HPReal>& lower, std::span<const HPComplex> b);

/// Inverse of a lower-triangular matrix.
Matrix<HPReal> lower_inverse(const Matrix<HPReal>& lower);

struct EigenDecomposition {
  std::vector<HPReal> values;  ///< ascending
  Matrix<HPReal> vectors;      ///< column i pairs with values[i]
  int sweeps = 0;
  long rotations = 0;
  /// Condition number of D^-1/2 M D^-1/2 (D = diag M), the factor that
  /// governs relative accuracy of the small eigenvalues.
  HPReal scaled_condition;
  /// 2^-(bits/2) * scaled_condition
  HPReal relative_error_bound;
  Bits bits = 0;
};

inline constexpr int kJacobiSweepCap = 40;

/// Cyclic two-sided Jacobi with a relative off-diagonal threshold, which keeps
/// tiny eigenvalues of positive definite matrices accurate to high relative
/// precision. Throws NoConvergence after `max_sweeps`.
EigenDecomposition hp_symmetric_eigen(const Matrix<HPReal>& m, Bits bits, int max_sweeps = kJacobiSweepCap);

struct LadderOptions {
  double reltol = 1e-6;
  Bits start_bits = 128;
  Bits cap_bits = 8192;
};

struct LadderStep {
  Bits bits;
  HPReal lambda_min;
};

struct MinEigResult {
  HPReal value;
  std::vector<HPReal> vector;  ///< unit l2 norm
  Bits bits_used = 0;
  std::vector<LadderStep> ladder;
};

/// Rebuilds the matrix at a requested precision.
using MatrixBuilder = std::function<Matrix<HPReal>(Bits)>;

/// Smallest eigenvalue from a precision ladder: bits double from start_bits
/// until two consecutive levels agree to reltol. A matrix that is already
/// diagonal is exact at the first level. Throws PrecisionError at the cap.
MinEigResult min_eig_adaptive(const MatrixBuilder& build, const LadderOptions& options = {});

}  // namespace srf
