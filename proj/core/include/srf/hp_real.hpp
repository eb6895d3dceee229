#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace srf {

/// Mantissa precision in bits.
using Bits = long;

inline constexpr Bits kMinPrecision = 64;
inline constexpr Bits kMaxPrecision = 8192;
inline constexpr Bits kFallbackPrecision = 256;

/// Precision used for values constructed without an explicit bit budget.
/// Thread-local; initialised from SRF_PRECISION_BITS (default 256).
Bits default_precision();
void set_default_precision(Bits bits);

/// Reads SRF_PRECISION_BITS; returns 256 when unset or out of range.
Bits precision_from_environment();

/// RAII override of the thread's default precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(Bits bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Bits saved_;
};

/// Arbitrary-precision real backed by an mpfr_t.
///
/// Every value carries its own mantissa width. Binary operations produce a
/// result at the wider of the two operand precisions, rounding to nearest.
class HPReal {
 public:
  HPReal();
  HPReal(double v);  // NOLINT(google-explicit-constructor)
  HPReal(int v);     // NOLINT(google-explicit-constructor)
  HPReal(long v);    // NOLINT(google-explicit-constructor)
  HPReal(double v, Bits bits);
  HPReal(long v, Bits bits);

  /// Parses a decimal string (e.g. "0.1", "-3.25e-40") at the given precision.
  static HPReal parse(std::string_view text, Bits bits);
  /// p / q rounded once.
  static HPReal ratio(long p, long q, Bits bits);
  static HPReal pi(Bits bits);
  static HPReal zero(Bits bits) { return HPReal(0L, bits); }
  static HPReal one(Bits bits) { return HPReal(1L, bits); }

  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded (or exactly extended) to a new precision.
  HPReal at_precision(Bits bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Lossless scientific decimal: re-parsing at precision() returns this value.
  std::string to_string() const;
  /// Scientific decimal with a fixed number of significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent2() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);
  HPReal& operator+=(double rhs);
  HPReal& operator-=(double rhs);
  HPReal& operator*=(double rhs);
  HPReal& operator/=(double rhs);
  HPReal operator-() const;

  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal operator+(const HPReal& a, double b);
  friend HPReal operator-(const HPReal& a, double b);
  friend HPReal operator*(const HPReal& a, double b);
  friend HPReal operator/(const HPReal& a, double b);
  friend HPReal operator+(double a, const HPReal& b);
  friend HPReal operator-(double a, const HPReal& b);
  friend HPReal operator*(double a, const HPReal& b);
  friend HPReal operator/(double a, const HPReal& b);

  friend bool operator==(const HPReal& a, const HPReal& b);
  friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);
  friend bool operator==(const HPReal& a, double b);
  friend std::partial_ordering operator<=>(const HPReal& a, double b);

 private:
  struct Uninit {};
  HPReal(Uninit, Bits bits);

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const HPReal& x);

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal acos(const HPReal& x);
HPReal asin(const HPReal& x);
HPReal hypot(const HPReal& a, const HPReal& b);
HPReal pow(const HPReal& x, long n);
HPReal pow(const HPReal& x, const HPReal& e);
HPReal max(const HPReal& a, const HPReal& b);
HPReal min(const HPReal& a, const HPReal& b);
HPReal ldexp(const HPReal& x, long e);
bool isfinite(const HPReal& x);

/// 2^-bits, the unit roundoff scale at a given precision.
HPReal ulp_scale(Bits bits);

}  // namespace srf
