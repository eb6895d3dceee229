#include "srf/system.hpp"

#include "srf/errors.hpp"

#include <algorithm>
#include <string>

namespace srf {

namespace {

void require_band_fraction(const HPReal& y) {
  if (!(y > 0.0) || !(y < 0.5)) {
    throw DomainError("band fraction y must lie in (0, 1/2), got " + y.to_string(10));
  }
}

}  // namespace

SystemParams::SystemParams(HPReal y) : y_(std::move(y)) {
  require_band_fraction(y_);
  const Bits bits = y_.precision();
  srf_ = HPReal::one(bits) / y_;
  capacity_ = srf::capacity(y_, bits);
  arc_length_ = HPReal::pi(bits) * y_ * 2.0;
}

SystemParams SystemParams::from_y(const HPReal& y) { return SystemParams(y); }

SystemParams SystemParams::from_srf(const HPReal& srf) {
  if (!(srf > 2.0)) {
    throw DomainError("SRF must exceed 2, got " + srf.to_string(10));
  }
  return SystemParams(HPReal::one(srf.precision()) / srf);
}

SystemParams SystemParams::at_precision(Bits bits) const {
  // y itself is kept exact; only the derived quantities are re-rounded.
  HPReal y = y_.at_precision(std::max(bits, y_.precision()));
  SystemParams p(std::move(y));
  if (bits < p.y_.precision()) {
    p.srf_ = p.srf_.at_precision(bits);
    p.capacity_ = p.capacity_.at_precision(bits);
    p.arc_length_ = p.arc_length_.at_precision(bits);
  }
  return p;
}

HPReal capacity(const HPReal& y, Bits bits) {
  require_band_fraction(y);
  return sin(HPReal::pi(bits) * y.at_precision(std::max(bits, y.precision())) * 0.5).at_precision(bits);
}

HPReal gram_entry(const SystemParams& params, long m, Bits bits) {
  if (m == 0) return HPReal::one(bits);
  // y is exact at its own precision, so the product is formed at the wider width.
  const Bits work = std::max(bits, params.bits());
  const HPReal x = HPReal::pi(work) * params.y().at_precision(work) * static_cast<double>(m);
  return (sin(x) / x).at_precision(bits);
}

GramMatrix build_gram(const SystemParams& params, const SupportSet& support, Bits bits) {
  if (support.empty()) throw DomainError("build_gram requires a nonempty support");
  const std::size_t n = support.size();
  // Entries depend only on offset differences; evaluate each distinct one once.
  std::vector<long> diffs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) diffs.push_back(support[j] - support[i]);
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  std::vector<HPReal> values;
  values.reserve(diffs.size());
  for (long d : diffs) values.push_back(gram_entry(params, d, bits));
  auto lookup = [&](long d) -> const HPReal& {
    return values[static_cast<std::size_t>(std::lower_bound(diffs.begin(), diffs.end(), d) - diffs.begin())];
  };

  Matrix<HPReal> g(n, n, HPReal::zero(bits));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = lookup(support[j] - support[i]);
      g(j, i) = g(i, j);
    }
  return {support, std::move(g)};
}

Matrix<HPReal> cross_gram(const SystemParams& params, const SupportSet& rows, const SupportSet& cols,
                          Bits bits) {
  Matrix<HPReal> g(rows.size(), cols.size(), HPReal::zero(bits));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) g(i, j) = gram_entry(params, cols[j] - rows[i], bits);
  return g;
}

CoefficientVector::CoefficientVector(SupportSet s, std::vector<HPComplex> v)
    : support(std::move(s)), values(std::move(v)) {
  if (values.size() != support.size()) {
    throw DomainError("coefficient count " + std::to_string(values.size()) +
                      " does not match support size " + std::to_string(support.size()));
  }
}

CoefficientVector CoefficientVector::real(SupportSet s, const std::vector<HPReal>& v) {
  std::vector<HPComplex> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x, HPReal::zero(x.precision()));
  return {std::move(s), std::move(c)};
}

std::size_t CoefficientVector::sparsity() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const HPComplex& z) { return !z.re.is_zero() || !z.im.is_zero(); }));
}

HPReal CoefficientVector::l2_norm(Bits bits) const {
  HPReal s = HPReal::zero(bits);
  for (const auto& z : values) s += norm2(z);
  return sqrt(s);
}

std::vector<HPComplex> CoefficientVector::embedded(const SupportSet& window, Bits bits) const {
  if (!support.is_subset_of(window)) {
    throw SupportNotContained("support " + support.to_string() + " is not contained in window " +
                              window.to_string());
  }
  std::vector<HPComplex> out(window.size(), HPComplex(HPReal::zero(bits), HPReal::zero(bits)));
  for (std::size_t i = 0; i < support.size(); ++i) {
    const HPComplex& v = values[i];
    out[window.index_of(support[i])] = HPComplex(v.re.at_precision(bits), v.im.at_precision(bits));
  }
  return out;
}

MeasurementVector synthesize(const SystemParams& params, const CoefficientVector& x, const SupportSet& window) {
  const Bits bits = params.bits();
  return {window, x.embedded(window, bits), HPReal::zero(bits)};
}

HPReal quadratic_form(const Matrix<HPReal>& g, std::span<const HPComplex> x) {
  const std::size_t n = x.size();
  HPReal s = HPReal::zero(g(0, 0).precision());
  for (std::size_t i = 0; i < n; ++i) {
    // Re(conj(x_i) x_j) = re_i re_j + im_i im_j
    HPReal row = HPReal::zero(s.precision());
    for (std::size_t j = 0; j < n; ++j) row += g(i, j) * (x[i].re * x[j].re + x[i].im * x[j].im);
    s += row;
  }
  return s;
}

HPReal measurement_norm(const SystemParams& params, const MeasurementVector& f, Bits bits) {
  if (f.rho < 0.0) throw DomainError("measurement remainder rho must be nonnegative");
  HPReal sq = f.rho.at_precision(bits) * f.rho.at_precision(bits);
  if (!f.window.empty()) {
    const GramMatrix g = build_gram(params, f.window, bits);
    HPReal scale = HPReal::zero(bits);
    for (const auto& z : f.coeffs) scale += norm2(z);
    const HPReal q = quadratic_form(g.entries, f.coeffs);
    if (q < -(scale * ulp_scale(bits / 2))) {
      throw PrecisionError("quadratic form evaluated to " + q.to_string(6) + "; increase precision");
    }
    if (q > 0.0) sq += q;
  }
  return sqrt(sq);
}

std::vector<HPComplex> difference(std::span<const HPComplex> x, std::span<const HPComplex> y) {
  if (x.size() != y.size()) throw DomainError("difference of vectors with different lengths");
  std::vector<HPComplex> d;
  d.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d.push_back(x[i] - y[i]);
  return d;
}

}  // namespace srf
