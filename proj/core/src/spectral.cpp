#include "srf/spectral.hpp"

#include "srf/errors.hpp"
#include "srf/parallel.hpp"
#include "srf/szego.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace srf {

MinEigResult gram_min_eig(const SystemParams& params, const SupportSet& t, const LadderOptions& ladder) {
  if (t.empty()) throw DomainError("sigma_min requires a nonempty support");
  return min_eig_adaptive([&](Bits bits) { return build_gram(params, t, bits).entries; }, ladder);
}

HPReal sigma_min(const SystemParams& params, const SupportSet& t, const LadderOptions& ladder) {
  const MinEigResult r = gram_min_eig(params, t, ladder);
  if (!(r.value > 0.0)) throw PrecisionError("Gram matrix of " + t.to_string() + " is not positive definite");
  return sqrt(r.value);
}

std::string to_string(SearchMode mode) { return mode == SearchMode::contiguous ? "contiguous" : "exhaustive"; }

SearchMode parse_search_mode(const std::string& text) {
  if (text == "contiguous") return SearchMode::contiguous;
  if (text == "exhaustive") return SearchMode::exhaustive;
  throw DomainError("unknown search mode '" + text + "'");
}

namespace {

// a is below b beyond the relative tie tolerance.
bool clearly_less(const HPReal& a, const HPReal& b, const HPReal& tol) { return a < b - abs(b) * tol; }

std::vector<HPReal> sigmas(const SystemParams& params, const std::vector<SupportSet>& supports,
                           const LadderOptions& ladder) {
  std::vector<HPReal> out(supports.size());
  parallel_for(supports.size(), [&](std::size_t i) { out[i] = sigma_min(params, supports[i], ladder); });
  return out;
}

}  // namespace

EpsilonResult epsilon(const SystemParams& params, int k, SearchMode mode, long span_max,
                      const LadderOptions& ladder) {
  if (k < 1) throw DomainError("epsilon requires k >= 1");
  EpsilonResult r;
  r.k = k;
  r.mode = mode;
  const auto size = static_cast<std::size_t>(k);
  if (mode == SearchMode::contiguous) {
    r.attaining_support = SupportSet::contiguous(size);
    r.value = sigma_min(params, r.attaining_support, ladder);
    r.span_searched = k - 1;
    r.supports_examined = 1;
    return r;
  }
  if (span_max < k - 1) {
    throw DomainError("span " + std::to_string(span_max) + " cannot hold " + std::to_string(k) + " offsets");
  }
  const std::vector<SupportSet> supports = canonical_supports(size, span_max);
  const std::vector<HPReal> values = sigmas(params, supports, ladder);
  const HPReal tol = ulp_scale(params.bits() / 2);
  std::size_t best = 0;
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (clearly_less(values[i], values[best], tol)) best = i;
  r.value = values[best];
  r.attaining_support = supports[best];
  r.span_searched = span_max;
  r.supports_examined = supports.size();
  return r;
}

SparkResult eps_spark(const SystemParams& params, const HPReal& eps, int k_max, SearchMode mode, long span_max,
                      const LadderOptions& ladder) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  SparkResult s;
  for (int k = 1; k <= k_max; ++k) {
    s.levels.push_back(epsilon(params, k, mode, std::max<long>(span_max, k - 1), ladder));
    if (s.levels.back().value < eps) return s;
    s.value = k;
  }
  s.saturated = true;
  return s;
}

SrfBounds verify_srf_bounds(const SystemParams& params, int n_max, Bits bits, const LadderOptions& ladder) {
  if (n_max < 1) throw DomainError("verify_srf_bounds requires n_max >= 1");
  const SystemParams p = params.at_precision(bits);
  const OrthoPolyTable table = leading_coeffs(p, n_max, bits);
  const HPReal& c = p.capacity();

  SrfBounds out;
  std::vector<HPReal> eps(static_cast<std::size_t>(n_max) + 1);
  parallel_for(eps.size(), [&](std::size_t n) { eps[n] = sigma_min(params, SupportSet::contiguous(n + 1), ladder); });

  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    RatioRow row{n, eps[i].at_precision(std::max(bits, eps[i].precision())), table.cholesky_diag[i],
                 pow(c, static_cast<long>(n)) * 4.0, {}};
    row.ratio = row.eps / pow(c / 4.0, static_cast<long>(n));
    const std::string suffix = "[n=" + std::to_string(n) + "]";
    out.checks.push_back(BoundCheck::less_equal("eps_le_kinv" + suffix, row.eps, row.k_inv));
    out.checks.push_back(BoundCheck::less_equal("kinv_le_4cn" + suffix, row.k_inv, row.upper));
    out.checks.push_back(BoundCheck::less_equal("ratio_positive" + suffix, HPReal::zero(bits), row.ratio));
    // r_0 = 1 trivially; the constant of interest is the minimum over n >= 1.
    if (n >= 1 && (n == 1 || row.ratio < out.min_ratio)) {
      out.min_ratio = row.ratio;
      out.min_ratio_n = n;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

// Every pairwise difference of b is at least that of a, one strictly.
bool dominates(const SupportSet& b, const SupportSet& a) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const long db = b[j] - b[i];
      const long da = a[j] - a[i];
      if (db < da) return false;
      strict = strict || db > da;
    }
  return strict;
}

}  // namespace

ContiguityScan contiguity_scan(const SystemParams& params, std::size_t size, long span_max, std::size_t budget,
                               const LadderOptions& ladder) {
  if (size < 2) throw DomainError("contiguity_scan requires size >= 2");
  if (span_max < static_cast<long>(size) - 1) throw DomainError("span too small for the support size");
  const std::vector<SupportSet> supports = canonical_supports(size, span_max, budget);
  const std::vector<HPReal> values = sigmas(params, supports, ladder);
  const HPReal tol = ulp_scale(params.bits() / 2);

  ContiguityScan scan;
  for (std::size_t i = 0; i < supports.size(); ++i) scan.table.push_back({supports[i], values[i]});
  std::stable_sort(scan.table.begin(), scan.table.end(),
                   [](const ContiguityRow& a, const ContiguityRow& b) { return a.sigma < b.sigma; });
  // The contiguous support is first in lexicographic order.
  scan.holds = true;
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (!clearly_less(values[0], values[i], tol)) scan.holds = false;

  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = 0; j < supports.size(); ++j) {
      if (i == j || !dominates(supports[j], supports[i])) continue;
      ++scan.monotone_pairs;
      if (!clearly_less(values[i], values[j], tol)) ++scan.monotone_violations;
    }
  return scan;
}

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("linear_fit needs at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DegeneracyError("fit abscissae are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

SmallYFit smally_exponent(const SupportSet& t, const std::vector<HPReal>& y_grid, Bits bits,
                          const LadderOptions& ladder) {
  if (y_grid.size() < 4) throw DomainError("smally_exponent needs at least 4 y values");
  for (const auto& y : y_grid)
    if (!(y > 0.0) || y > 0.02) throw DomainError("small-y grid must lie in (0, 0.02]");
  if (t.size() < 2) throw DomainError("smally_exponent needs at least two offsets");

  SmallYFit fit;
  fit.points.resize(y_grid.size());
  parallel_for(y_grid.size(), [&](std::size_t i) {
    const SystemParams p = SystemParams::from_y(y_grid[i].at_precision(std::max(bits, y_grid[i].precision())));
    const MinEigResult r = gram_min_eig(p, t, ladder);
    fit.points[i] = {p.y(), r.value, r.bits_used};
  });
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& pt : fit.points) {
    if (!(pt.lambda_min > 0.0)) throw DegeneracyError("lambda_min underflowed at y = " + pt.y.to_string(6));
    lx.push_back(log(pt.y).to_double());
    ly.push_back(log(pt.lambda_min).to_double());
  }
  const auto [slope, intercept] = linear_fit(lx, ly);
  fit.alpha = slope;
  fit.mu_fit = std::exp(intercept);
  if (t.size() - 1 <= static_cast<std::size_t>(kMaxExactHilbertOrder)) fit.pencil = pencil_mu(t.canonical(), bits);
  return fit;
}

}  // namespace srf
