#include "srf/laurent.hpp"

#include "srf/errors.hpp"

#include <algorithm>
#include <string>

namespace srf {

namespace {

HPComplex czero(Bits bits) { return {HPReal::zero(bits), HPReal::zero(bits)}; }

}  // namespace

LaurentSeries::LaurentSeries(long top_degree, std::vector<HPComplex> coefficients, HPReal truncation_bound,
                             bool exact)
    : top_(top_degree), coeffs_(std::move(coefficients)), tail_(std::move(truncation_bound)), exact_(exact) {
  if (exact_) tail_ = HPReal::zero(tail_.precision());
  if (coeffs_.empty()) throw DomainError("LaurentSeries needs at least one coefficient");
  if (tail_ < 0.0) throw DomainError("truncation bound must be nonnegative");
}

HPComplex LaurentSeries::coefficient(long degree) const {
  if (degree > top_ || degree < low_degree()) return czero(bits());
  return coeffs_[static_cast<std::size_t>(top_ - degree)];
}

std::vector<HPComplex> LaurentSeries::polynomial_part() const {
  if (low_degree() > 0) {
    throw TruncationError("series stops at degree " + std::to_string(low_degree()) +
                          "; the polynomial part is not determined");
  }
  std::vector<HPComplex> out;
  for (long d = 0; d <= std::max(top_, 0L); ++d) out.push_back(coefficient(d));
  return out;
}

HPComplex LaurentSeries::evaluate(const HPComplex& z) const {
  // Horner in z from the top, then divide by z^(-low) for the negative part.
  HPComplex acc = czero(bits());
  for (const auto& a : coeffs_) acc = acc * z + a;
  const long low = low_degree();
  return low >= 0 ? acc * pow(z, low) : acc / pow(z, -low);
}

HPReal LaurentSeries::abs_sum() const {
  HPReal s = HPReal::zero(bits());
  for (const auto& a : coeffs_) s += abs(a);
  return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const Bits bits = std::max(a.bits(), b.bits());
  const long top = std::max(a.top_degree(), b.top_degree());
  long low = std::min(a.low_degree(), b.low_degree());
  if (!a.exact()) low = std::max(low, a.low_degree());
  if (!b.exact()) low = std::max(low, b.low_degree());
  std::vector<HPComplex> c;
  for (long d = top; d >= low; --d) c.push_back(a.coefficient(d) + b.coefficient(d));
  if (a.exact() && b.exact()) return {top, std::move(c), HPReal::zero(bits), true};
  // First dropped degree is low - 1: a truncated operand contributes its
  // bound there, an operand that still has a term there contributes it.
  HPReal tail = HPReal::zero(bits);
  for (const LaurentSeries* s : {&a, &b}) {
    if (!s->exact() && s->low_degree() == low) tail += s->truncation_bound();
    else tail += abs(s->coefficient(low - 1));
  }
  return {top, std::move(c), tail};
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const Bits bits = std::max(a.bits(), b.bits());
  const long top = a.top_degree() + b.top_degree();
  // Degree d is exact when no contributing pair reaches past a truncation.
  long low = a.low_degree() + b.low_degree();
  if (!b.exact()) low = std::max(low, a.top_degree() + b.low_degree());
  if (!a.exact()) low = std::max(low, b.top_degree() + a.low_degree());
  std::vector<HPComplex> c(static_cast<std::size_t>(top - low + 1), czero(bits));
  for (long i = a.top_degree(); i >= a.low_degree(); --i) {
    const HPComplex& ai = a.coefficients()[static_cast<std::size_t>(a.top_degree() - i)];
    for (long j = b.top_degree(); j >= b.low_degree(); --j) {
      const long d = i + j;
      if (d < low) break;
      c[static_cast<std::size_t>(top - d)] += ai * b.coefficients()[static_cast<std::size_t>(b.top_degree() - j)];
    }
  }
  if (a.exact() && b.exact()) return {top, std::move(c), HPReal::zero(bits), true};
  // Estimate for the first dropped coefficient: dropped terms of one factor
  // (bounded by its truncation bound) against the retained terms of the other.
  HPReal tail = b.truncation_bound() * a.abs_sum() + a.truncation_bound() * b.abs_sum();
  return {top, std::move(c), tail};
}

LaurentSeries pow(const LaurentSeries& a, long n) {
  if (n < 0) throw DomainError("LaurentSeries power must be nonnegative");
  const Bits bits = a.bits();
  LaurentSeries result(0, {HPComplex(HPReal::one(bits), HPReal::zero(bits))}, HPReal::zero(bits), true);
  for (long i = 0; i < n; ++i) result = result * a;
  return result;
}

LaurentSeries exterior_map_series(const HPReal& c, long truncation) {
  if (truncation < 0) throw DomainError("truncation depth must be nonnegative");
  const Bits bits = c.precision();
  // Phi(z) = (z - 1)/(2c) + (z/(2c)) S(1/z), S(u) = sqrt(1 + b u + u^2).
  const HPReal b = c * c * 4.0 - 2.0;
  const auto count = static_cast<std::size_t>(truncation + 3);
  std::vector<HPReal> s(count, HPReal::zero(bits));
  s[0] = HPReal::one(bits);
  for (std::size_t k = 1; k < count; ++k) {
    HPReal p = k == 1 ? b : (k == 2 ? HPReal::one(bits) : HPReal::zero(bits));
    for (std::size_t j = 1; j < k; ++j) p -= s[j] * s[k - j];
    s[k] = p * 0.5;
  }
  const HPReal two_c = c * 2.0;
  std::vector<HPComplex> coeffs;
  coeffs.emplace_back(HPReal::one(bits) / c, HPReal::zero(bits));
  coeffs.emplace_back((s[1] - 1.0) / two_c, HPReal::zero(bits));
  for (long k = 1; k <= truncation; ++k) coeffs.emplace_back(s[static_cast<std::size_t>(k + 1)] / two_c, HPReal::zero(bits));
  const HPReal tail = abs(s[static_cast<std::size_t>(truncation + 2)] / two_c);
  return {1, std::move(coeffs), tail};
}

LaurentSeries interior_map_series(const HPReal& c, long truncation) {
  if (truncation < 0) throw DomainError("truncation depth must be nonnegative");
  const Bits bits = c.precision();
  const HPReal one_minus = 1.0 - c * c;
  std::vector<HPComplex> coeffs;
  coeffs.emplace_back(c, HPReal::zero(bits));
  coeffs.emplace_back(one_minus, HPReal::zero(bits));
  HPReal power = HPReal::one(bits);
  for (long k = 1; k <= truncation; ++k) {
    power *= -c;
    coeffs.emplace_back(one_minus * power, HPReal::zero(bits));
  }
  const HPReal tail = abs(one_minus * power * c);
  return {1, std::move(coeffs), tail};
}

HPComplex poly_eval(const std::vector<HPComplex>& ascending, const HPComplex& z) {
  if (ascending.empty()) return czero(z.re.precision());
  HPComplex acc = ascending.back();
  for (std::size_t i = ascending.size() - 1; i-- > 0;) acc = acc * z + ascending[i];
  return acc;
}

}  // namespace srf
