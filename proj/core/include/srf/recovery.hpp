#pragma once

#include "srf/bound_check.hpp"
#include "srf/hp_real.hpp"
#include "srf/linalg.hpp"
#include "srf/spectral.hpp"
#include "srf/support.hpp"
#include "srf/system.hpp"

#include <cstddef>
#include <vector>

namespace srf {

inline constexpr std::size_t kDefaultWindowCap = 16;

struct RecoveryResult {
  CoefficientVector estimate;
  SupportSet support;
  std::size_t sparsity = 0;
  HPReal residual;
  std::size_t supports_examined = 0;
};

/// Brute-force (P0): smallest s <= k_cap for which some |T| = s subset of the
/// window explains f to within sigma; the lexicographically first such T.
/// The estimate is the least-squares fit on T. Throws Infeasible.
RecoveryResult l0_solve(const SystemParams& params, const MeasurementVector& f, const HPReal& sigma,
                        std::size_t k_cap, Bits bits, std::size_t window_cap = kDefaultWindowCap);

/// Squared residual ||f - A_T x_T||^2 of the least-squares fit on T, through
/// the Schur complement ||f||^2 - b* G_T^-1 b. Also returns x_T.
std::pair<HPReal, std::vector<HPComplex>> least_squares_residual(const MeasurementVector& f,
                                                                 const Matrix<HPReal>& window_gram,
                                                                 const HPReal& norm_sq, const SupportSet& t,
                                                                 Bits bits);

struct AdversarialPair {
  CoefficientVector x0;
  CoefficientVector x1;
  SupportSet t_star;
  HPReal eps2k;
  HPReal sigma;
  /// The k-th and (k+1)-th magnitudes of the eigenvector coincided; the split
  /// went to the lower indices.
  bool threshold_tie = false;
};

struct AdversaryOptions {
  SearchMode mode = SearchMode::exhaustive;
  long span_max = -1;  ///< -1: 2k + 3, the span of the minimax window
  /// Throw TieInThreshold instead of breaking a tie.
  bool strict_ties = false;
  LadderOptions ladder{};
};

/// Splits the least singular vector of A_{T*} (|T*| = 2k) into its k largest
/// entries (x1) and the rest (-x0), scaled so that ||x0 - x1|| = sigma/eps_2k.
AdversarialPair adversarial_pair(const SystemParams& params, int k, const HPReal& sigma, Bits bits,
                                 const AdversaryOptions& options = {});

struct MinimaxReport {
  AdversarialPair pair;
  SupportSet window;
  RecoveryResult recovery;
  HPReal error_x0;     ///< ||x_hat - x0||
  HPReal error_x1;     ///< ||x_hat - x1||
  HPReal upper_bound;  ///< 2 sigma / eps_2k
  HPReal lower_bound;  ///< sigma / (2 eps_2k)
  std::vector<BoundCheck> checks;
};

/// Adversarial pair, f = A x0 on T* padded by 2 on each side, (P0) with
/// tolerance sigma, and both sides of the minimax sandwich.
MinimaxReport minimax_experiment(const SystemParams& params, int k, const HPReal& sigma, Bits bits,
                                 const AdversaryOptions& options = {});

struct ScalingRow {
  HPReal srf;
  HPReal y;
  HPReal eps;
};

struct ScalingResult {
  int k = 0;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<ScalingRow> rows;
};

/// Fits log eps_2k (contiguous) against log SRF.
ScalingResult srf_scaling(int k, const std::vector<HPReal>& srf_grid, Bits bits, const LadderOptions& ladder = {});

}  // namespace srf
