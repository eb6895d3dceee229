#include "srf/hp_real.hpp"

#include "srf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

namespace srf {

namespace {

Bits clamp_bits(Bits bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  return bits;
}

thread_local Bits tl_default_precision = precision_from_environment();

}  // namespace

Bits precision_from_environment() {
  const char* env = std::getenv("SRF_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kFallbackPrecision;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < kMinPrecision || v > kMaxPrecision) {
    return kFallbackPrecision;
  }
  return v;
}

Bits default_precision() { return tl_default_precision; }

void set_default_precision(Bits bits) { tl_default_precision = clamp_bits(bits); }

PrecisionScope::PrecisionScope(Bits bits) : saved_(tl_default_precision) {
  set_default_precision(bits);
}

PrecisionScope::~PrecisionScope() { tl_default_precision = saved_; }

// ---------------------------------------------------------------------------

HPReal::HPReal(Uninit, Bits bits) { mpfr_init2(value_, clamp_bits(bits)); }

HPReal::HPReal() : HPReal(Uninit{}, default_precision()) { mpfr_set_zero(value_, 1); }

HPReal::HPReal(double v) : HPReal(Uninit{}, default_precision()) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}

HPReal::HPReal(int v) : HPReal(Uninit{}, default_precision()) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

HPReal::HPReal(long v) : HPReal(Uninit{}, default_precision()) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

HPReal::HPReal(double v, Bits bits) : HPReal(Uninit{}, bits) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}

HPReal::HPReal(long v, Bits bits) : HPReal(Uninit{}, bits) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

HPReal HPReal::parse(std::string_view text, Bits bits) {
  HPReal r(Uninit{}, bits);
  const std::string s(text);
  if (s.empty()) throw DomainError("empty number");
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

HPReal HPReal::ratio(long p, long q, Bits bits) {
  if (q == 0) throw DomainError("ratio with zero denominator");
  HPReal r(Uninit{}, bits);
  mpq_t quotient;
  mpq_init(quotient);
  mpq_set_si(quotient, p, 1);
  mpz_set_si(mpq_denref(quotient), q);
  mpq_canonicalize(quotient);
  mpfr_set_q(r.value_, quotient, MPFR_RNDN);
  mpq_clear(quotient);
  return r;
}

HPReal HPReal::pi(Bits bits) {
  HPReal r(Uninit{}, bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

HPReal::HPReal(const HPReal& other) : HPReal(Uninit{}, other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept : HPReal(Uninit{}, other.precision()) {
  mpfr_swap(value_, other.value_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::at_precision(Bits bits) const {
  HPReal r(Uninit{}, bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string HPReal::to_string() const {
  // 1 + ceil(p log10 2) significant digits guarantee an exact round trip.
  const int digits = 1 + static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120));
  return to_string(digits);
}

std::string HPReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

long HPReal::exponent2() const {
  if (mpfr_zero_p(value_) || !mpfr_number_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

#define SRF_COMPOUND(op, fn)                                  \
  HPReal& HPReal::operator op(const HPReal& rhs) {            \
    if (rhs.precision() > precision()) {                      \
      mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);    \
    }                                                         \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                \
    return *this;                                             \
  }
SRF_COMPOUND(+=, mpfr_add)
SRF_COMPOUND(-=, mpfr_sub)
SRF_COMPOUND(*=, mpfr_mul)
SRF_COMPOUND(/=, mpfr_div)
#undef SRF_COMPOUND

HPReal& HPReal::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

HPReal HPReal::operator-() const {
  HPReal r(Uninit{}, precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

#define SRF_BINARY(op, fn)                                             \
  HPReal operator op(const HPReal& a, const HPReal& b) {               \
    HPReal r(HPReal::Uninit{}, std::max(a.precision(), b.precision())); \
    fn(r.value_, a.value_, b.value_, MPFR_RNDN);                       \
    return r;                                                          \
  }
SRF_BINARY(+, mpfr_add)
SRF_BINARY(-, mpfr_sub)
SRF_BINARY(*, mpfr_mul)
SRF_BINARY(/, mpfr_div)
#undef SRF_BINARY

HPReal operator+(const HPReal& a, double b) {
  HPReal r(HPReal::Uninit{}, a.precision());
  mpfr_add_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
HPReal operator-(const HPReal& a, double b) {
  HPReal r(HPReal::Uninit{}, a.precision());
  mpfr_sub_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
HPReal operator*(const HPReal& a, double b) {
  HPReal r(HPReal::Uninit{}, a.precision());
  mpfr_mul_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
HPReal operator/(const HPReal& a, double b) {
  HPReal r(HPReal::Uninit{}, a.precision());
  mpfr_div_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
HPReal operator+(double a, const HPReal& b) { return b + a; }
HPReal operator-(double a, const HPReal& b) {
  HPReal r(HPReal::Uninit{}, b.precision());
  mpfr_d_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}
HPReal operator*(double a, const HPReal& b) { return b * a; }
HPReal operator/(double a, const HPReal& b) {
  HPReal r(HPReal::Uninit{}, b.precision());
  mpfr_d_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const HPReal& a, double b) {
  return !mpfr_nan_p(a.value_) && !std::isnan(b) && mpfr_cmp_d(a.value_, b) == 0;
}

std::partial_ordering operator<=>(const HPReal& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const HPReal& x) {
  const auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 17);
}

namespace {

template <typename Fn>
HPReal unary(const HPReal& x, Fn fn) {
  HPReal r = HPReal::zero(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

HPReal abs(const HPReal& x) { return unary(x, mpfr_abs); }
HPReal sqrt(const HPReal& x) { return unary(x, mpfr_sqrt); }
HPReal sin(const HPReal& x) { return unary(x, mpfr_sin); }
HPReal cos(const HPReal& x) { return unary(x, mpfr_cos); }
HPReal exp(const HPReal& x) { return unary(x, mpfr_exp); }
HPReal log(const HPReal& x) { return unary(x, mpfr_log); }
HPReal acos(const HPReal& x) { return unary(x, mpfr_acos); }
HPReal asin(const HPReal& x) { return unary(x, mpfr_asin); }

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r = HPReal::zero(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

HPReal hypot(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::zero(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, long n) {
  HPReal r = HPReal::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, const HPReal& e) {
  HPReal r = HPReal::zero(std::max(x.precision(), e.precision()));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }
HPReal min(const HPReal& a, const HPReal& b) { return b < a ? b : a; }

HPReal ldexp(const HPReal& x, long e) {
  HPReal r = x;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

bool isfinite(const HPReal& x) { return x.is_finite(); }

HPReal ulp_scale(Bits bits) { return ldexp(HPReal::one(64), -bits); }

}  // namespace srf
