#include "srf/recovery.hpp"

#include "srf/errors.hpp"
#include "srf/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace srf {

namespace {

HPComplex czero(Bits bits) { return {HPReal::zero(bits), HPReal::zero(bits)}; }

}  // namespace

std::pair<HPReal, std::vector<HPComplex>> least_squares_residual(const MeasurementVector& f,
                                                                 const Matrix<HPReal>& window_gram,
                                                                 const HPReal& norm_sq, const SupportSet& t,
                                                                 Bits bits) {
  if (t.empty()) return {norm_sq, {}};
  // b_i = <f, a_{t_i}> = sum_w coeffs_w G(t_i, w).
  std::vector<std::size_t> rows;
  for (long tau : t.offsets()) {
    const std::size_t r = f.window.index_of(tau);
    if (r == f.window.size()) throw SupportNotContained("support " + t.to_string() + " leaves the window");
    rows.push_back(r);
  }
  std::vector<HPComplex> b(t.size(), czero(bits));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < f.window.size(); ++j) b[i] += f.coeffs[j] * window_gram(rows[i], j);

  Matrix<HPReal> gt(t.size(), t.size(), HPReal::zero(bits));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) gt(i, j) = window_gram(rows[i], rows[j]);
  const Matrix<HPReal> l = hp_cholesky(gt, bits);
  std::vector<HPComplex> x = cholesky_solve(l, std::span<const HPComplex>(b));
  HPReal explained = HPReal::zero(bits);
  for (std::size_t i = 0; i < t.size(); ++i) explained += b[i].re * x[i].re + b[i].im * x[i].im;
  return {norm_sq - explained, std::move(x)};
}

RecoveryResult l0_solve(const SystemParams& params, const MeasurementVector& f, const HPReal& sigma,
                        std::size_t k_cap, Bits bits, std::size_t window_cap) {
  if (sigma < 0.0) throw DomainError("sigma must be nonnegative");
  if (f.window.size() > window_cap) {
    throw BudgetExceeded("window of " + std::to_string(f.window.size()) + " atoms exceeds the cap of " +
                         std::to_string(window_cap));
  }
  if (k_cap > f.window.size()) throw DomainError("k_cap exceeds the window size");
  if (f.rho > sigma) throw Infeasible("orthogonal remainder rho exceeds sigma; no support can explain f");

  const Matrix<HPReal> gw = f.window.empty() ? Matrix<HPReal>() : build_gram(params, f.window, bits).entries;
  const HPReal sigma_sq = sigma.at_precision(bits) * sigma.at_precision(bits);
  HPReal norm_sq = measurement_norm(params, f, bits);
  norm_sq *= norm_sq;
  RecoveryResult out;
  for (std::size_t s = 0; s <= k_cap; ++s) {
    const std::vector<SupportSet> supports = subsets_of_size(f.window, s);
    std::vector<std::pair<HPReal, std::vector<HPComplex>>> fits(supports.size());
    parallel_for(supports.size(),
                 [&](std::size_t i) { fits[i] = least_squares_residual(f, gw, norm_sq, supports[i], bits); });
    out.supports_examined += supports.size();
    for (std::size_t i = 0; i < supports.size(); ++i) {
      if (fits[i].first > sigma_sq) continue;
      out.support = supports[i];
      out.sparsity = s;
      out.residual = sqrt(max(fits[i].first, HPReal::zero(bits)));
      out.estimate = CoefficientVector(supports[i], std::move(fits[i].second));
      return out;
    }
  }
  throw Infeasible("no support of size <= " + std::to_string(k_cap) + " explains f within sigma");
}

AdversarialPair adversarial_pair(const SystemParams& params, int k, const HPReal& sigma, Bits bits,
                                 const AdversaryOptions& options) {
  if (k < 1) throw DomainError("adversarial_pair requires k >= 1");
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const long span = options.span_max < 0 ? 2L * k + 3 : options.span_max;
  const EpsilonResult eps = epsilon(params, 2 * k, options.mode, span, options.ladder);
  const MinEigResult eig = gram_min_eig(params, eps.attaining_support, options.ladder);

  const auto n = static_cast<std::size_t>(2 * k);
  std::vector<HPReal> v;
  for (const auto& x : eig.vector) v.push_back(x.at_precision(bits));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return abs(v[a]) > abs(v[b]); });

  AdversarialPair pair;
  const auto kk = static_cast<std::size_t>(k);
  const HPReal gap = abs(v[order[kk - 1]]) - abs(v[order[kk]]);
  pair.threshold_tie = gap <= abs(v[order[kk - 1]]) * ulp_scale(std::min(bits, eig.bits_used) / 2);
  if (pair.threshold_tie && options.strict_ties) {
    throw TieInThreshold("entries " + std::to_string(order[kk - 1]) + " and " + std::to_string(order[kk]) +
                         " of the least singular vector have equal magnitude");
  }
  if (pair.threshold_tie) {
    // Among the tied magnitudes prefer lower indices for x1.
    const HPReal cut = abs(v[order[kk - 1]]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const bool ta = abs(abs(v[a]) - cut) <= cut * ulp_scale(std::min(bits, eig.bits_used) / 2);
      const bool tb = abs(abs(v[b]) - cut) <= cut * ulp_scale(std::min(bits, eig.bits_used) / 2);
      if (ta && tb) return a < b;
      return abs(v[a]) > abs(v[b]);
    });
  }
  std::vector<long> top;
  std::vector<long> rest;
  for (std::size_t i = 0; i < n; ++i) (i < kk ? top : rest).push_back(static_cast<long>(order[i]));
  std::sort(top.begin(), top.end());
  std::sort(rest.begin(), rest.end());

  pair.t_star = eps.attaining_support;
  pair.eps2k = eps.value.at_precision(std::max(bits, eps.value.precision()));
  pair.sigma = sigma.at_precision(std::max(bits, sigma.precision()));
  const HPReal scale = pair.sigma / pair.eps2k;
  auto build = [&](const std::vector<long>& idx, double sign) {
    std::vector<long> offs;
    std::vector<HPReal> vals;
    for (long i : idx) {
      offs.push_back(pair.t_star[static_cast<std::size_t>(i)]);
      vals.push_back(v[static_cast<std::size_t>(i)] * scale * sign);
    }
    return CoefficientVector::real(SupportSet(offs), vals);
  };
  pair.x1 = build(top, 1.0);
  pair.x0 = build(rest, -1.0);

  // Postconditions: ||x0 - x1|| = sigma/eps and ||A(x0 - x1)|| <= sigma.
  const std::vector<HPComplex> d =
      difference(pair.x0.embedded(pair.t_star, bits), pair.x1.embedded(pair.t_star, bits));
  HPReal dn = HPReal::zero(bits);
  for (const auto& z : d) dn += norm2(z);
  const HPReal tol(1e-10, bits);
  if (abs(sqrt(dn) * pair.eps2k / pair.sigma - 1.0) > tol) {
    throw PrecisionError("adversarial pair does not satisfy ||x0 - x1|| = sigma/eps");
  }
  const HPReal image = sqrt(max(quadratic_form(build_gram(params, pair.t_star, bits).entries, d), HPReal::zero(bits)));
  if (image > pair.sigma * (1.0 + 1e-10)) throw PrecisionError("adversarial pair violates ||A(x0 - x1)|| <= sigma");
  return pair;
}

MinimaxReport minimax_experiment(const SystemParams& params, int k, const HPReal& sigma, Bits bits,
                                 const AdversaryOptions& options) {
  MinimaxReport r;
  r.pair = adversarial_pair(params, k, sigma, bits, options);
  const SupportSet& t = r.pair.t_star;
  r.window = SupportSet::contiguous(static_cast<std::size_t>(t.span()) + 5, t.front() - 2);

  const MeasurementVector f = synthesize(params, r.pair.x0, r.window);
  r.recovery = l0_solve(params, f, r.pair.sigma, static_cast<std::size_t>(k), bits);

  const std::vector<HPComplex> xh = r.recovery.estimate.embedded(r.window, bits);
  const std::vector<HPComplex> x0 = r.pair.x0.embedded(r.window, bits);
  const std::vector<HPComplex> x1 = r.pair.x1.embedded(r.window, bits);
  auto dist = [&](const std::vector<HPComplex>& a, const std::vector<HPComplex>& b) {
    HPReal s = HPReal::zero(bits);
    for (std::size_t i = 0; i < a.size(); ++i) s += norm2(a[i] - b[i]);
    return sqrt(s);
  };
  r.error_x0 = dist(xh, x0);
  r.error_x1 = dist(xh, x1);
  r.upper_bound = r.pair.sigma / r.pair.eps2k * 2.0;
  r.lower_bound = r.pair.sigma / (r.pair.eps2k * 2.0);
  r.checks.push_back(BoundCheck::less_equal("estimate_error_upper", r.error_x0, r.upper_bound));
  r.checks.push_back(BoundCheck::less_equal("estimate_error_lower", r.lower_bound, max(r.error_x0, r.error_x1)));

  // Direct recomputation from the window Gram matrix.
  const Matrix<HPReal> gw = build_gram(params, r.window, bits).entries;
  const HPReal slack = HPReal::one(bits) + HPReal(1e-30, bits);
  const HPReal fit = sqrt(max(quadratic_form(gw, difference(xh, x0)), HPReal::zero(bits)));
  r.checks.push_back(BoundCheck::less_equal("estimate_residual", fit, r.pair.sigma * slack));
  const HPReal pair_gap = sqrt(max(quadratic_form(gw, difference(x0, x1)), HPReal::zero(bits)));
  r.checks.push_back(BoundCheck::less_equal("pair_indistinguishable", pair_gap, r.pair.sigma * slack));
  return r;
}

ScalingResult srf_scaling(int k, const std::vector<HPReal>& srf_grid, Bits bits, const LadderOptions& ladder) {
  if (k < 1) throw DomainError("srf_scaling requires k >= 1");
  if (srf_grid.size() < 4) throw DomainError("srf_scaling needs at least 4 SRF values");
  ScalingResult out;
  out.k = k;
  out.rows.resize(srf_grid.size());
  parallel_for(srf_grid.size(), [&](std::size_t i) {
    const SystemParams p = SystemParams::from_srf(srf_grid[i].at_precision(std::max(bits, srf_grid[i].precision())));
    out.rows[i] = {p.srf(), p.y(), epsilon(p, 2 * k, SearchMode::contiguous, 2L * k - 1, ladder).value};
  });
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& row : out.rows) {
    lx.push_back(log(row.srf).to_double());
    ly.push_back(log(row.eps).to_double());
  }
  std::tie(out.slope, out.intercept) = linear_fit(lx, ly);
  return out;
}

}  // namespace srf
