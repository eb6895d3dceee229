#pragma once

// The acceptance suite: one self-contained check per criterion, each with
// its own independent recomputation where the criterion asks for one.

#include "srf/complex.hpp"
#include "srf/hp_real.hpp"
#include "srf/matrix.hpp"
#include "srf/system.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriteriaCount = 11;

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  /// Criteria to run; empty runs all of them.
  std::vector<int> only;
};

/// Runs one criterion. Errors inside a criterion are reported as a failure
/// with the message in `detail`.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs the selected criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 ratio_stability  0.41s  detail"
std::string format_result(const CriterionResult& r);

namespace oracle {

/// Dense LU with partial pivoting; solves a x = b for complex b.
std::vector<HPComplex> lu_solve(Matrix<HPReal> a, std::vector<HPComplex> b);

struct L0Answer {
  bool feasible = false;
  std::vector<long> support;
  std::vector<HPComplex> values;
  HPReal residual;
};

/// Exhaustive (P0) over all 2^|W| subsets ordered by (size, lexicographic),
/// residual evaluated directly as ||f - A x||^2 through the window Gram matrix.
L0Answer exhaustive_l0(const SystemParams& params, const MeasurementVector& f, const HPReal& sigma,
                       std::size_t k_cap, Bits bits);

/// k_n from modified Gram-Schmidt on monomials with quadrature inner products.
std::vector<HPReal> gram_schmidt_leading(const SystemParams& params, int n_max, Bits bits);

}  // namespace oracle

}  // namespace srf
