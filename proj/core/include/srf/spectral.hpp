#pragma once

#include "srf/bound_check.hpp"
#include "srf/hp_real.hpp"
#include "srf/linalg.hpp"
#include "srf/pencil.hpp"
#include "srf/support.hpp"
#include "srf/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srf {

/// Smallest Gram eigenvalue over T through the precision ladder.
MinEigResult gram_min_eig(const SystemParams& params, const SupportSet& t, const LadderOptions& ladder = {});

/// sqrt(lambda_min(G_T)), in (0, 1].
HPReal sigma_min(const SystemParams& params, const SupportSet& t, const LadderOptions& ladder = {});

enum class SearchMode { contiguous, exhaustive };

std::string to_string(SearchMode mode);
/// "contiguous" or "exhaustive"; throws DomainError otherwise.
SearchMode parse_search_mode(const std::string& text);

struct EpsilonResult {
  int k = 0;
  HPReal value;
  SupportSet attaining_support;
  SearchMode mode = SearchMode::contiguous;
  long span_searched = 0;
  std::size_t supports_examined = 0;
};

/// eps_k. Contiguous mode evaluates {0..k-1}; exhaustive mode scans every
/// canonical support with last offset <= span_max, lexicographic tie-break.
EpsilonResult epsilon(const SystemParams& params, int k, SearchMode mode, long span_max,
                      const LadderOptions& ladder = {});

struct SparkResult {
  int value = 0;
  /// True when eps_{k_max} >= eps: the true spark is at least k_max.
  bool saturated = false;
  std::vector<EpsilonResult> levels;
};

SparkResult eps_spark(const SystemParams& params, const HPReal& eps, int k_max, SearchMode mode, long span_max,
                      const LadderOptions& ladder = {});

struct RatioRow {
  int n = 0;
  HPReal eps;        ///< eps_{n+1}
  HPReal k_inv;      ///< k_n^-1
  HPReal upper;      ///< 4 c^n
  HPReal ratio;      ///< eps_{n+1} / (c/4)^n
};

struct SrfBounds {
  std::vector<BoundCheck> checks;
  std::vector<RatioRow> rows;
  HPReal min_ratio;  ///< over n >= 1
  int min_ratio_n = 0;
};

/// eps_{n+1} <= k_n^-1 <= 4 c^n for n = 0..n_max (contiguous eps), plus the
/// ratio r_n against (c/4)^n. Cholesky runs at `bits`.
SrfBounds verify_srf_bounds(const SystemParams& params, int n_max, Bits bits, const LadderOptions& ladder = {});

struct ContiguityRow {
  SupportSet support;
  HPReal sigma;
};

struct ContiguityScan {
  bool holds = false;
  std::vector<ContiguityRow> table;  ///< ascending sigma
  std::size_t monotone_pairs = 0;     ///< dominated pairs compared
  std::size_t monotone_violations = 0;
};

/// All canonical supports of one size: does {0..size-1} strictly minimize
/// sigma_min? Also compares every pair where one support's pairwise
/// differences dominate the other's.
ContiguityScan contiguity_scan(const SystemParams& params, std::size_t size, long span_max,
                               std::size_t budget = 1'000'000, const LadderOptions& ladder = {});

struct SmallYPoint {
  HPReal y;
  HPReal lambda_min;
  Bits bits_used = 0;
};

struct SmallYFit {
  double alpha = 0.0;
  double mu_fit = 0.0;  ///< exp(intercept)
  std::vector<SmallYPoint> points;
  std::optional<PencilData> pencil;
};

/// Least-squares fit of log lambda_min(G_T(y)) = log mu + alpha log y.
/// Requires at least four y values in (0, 0.02].
SmallYFit smally_exponent(const SupportSet& t, const std::vector<HPReal>& y_grid, Bits bits,
                          const LadderOptions& ladder = {});

/// Ordinary least squares slope and intercept.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace srf
