#pragma once

#include "srf/hp_real.hpp"

#include <cmath>
#include <ostream>

namespace srf {

/// Minimal complex number over an arbitrary real scalar.
///
/// std::complex is only specified for the built-in floating types, so the
/// high-precision path gets its own small value type. Works for double too,
/// which lets the analysis code be written once.
template <typename T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(re * 0.0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex polar(const T& radius, const T& angle) {
    using std::cos;
    using std::sin;
    return {radius * cos(angle), radius * sin(angle)};
  }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const T& s) {
    re /= s;
    im /= s;
    return *this;
  }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const T& s) { return a /= s; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm keeps the intermediate magnitudes bounded.
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      const T r = b.im / b.re;
      const T d = b.re + b.im * r;
      return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    const T r = b.re / b.im;
    const T d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
  }
  friend Complex operator+(Complex a, const T& s) {
    a.re += s;
    return a;
  }
  friend Complex operator-(Complex a, const T& s) {
    a.re -= s;
    return a;
  }
  friend Complex operator+(const T& s, Complex a) {
    a.re += s;
    return a;
  }
  friend Complex operator-(const T& s, const Complex& a) { return {s - a.re, -a.im}; }
  friend Complex operator/(const T& s, const Complex& a) { return Complex(s) / a; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <typename T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, -z.im};
}

template <typename T>
T norm2(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename T>
T abs(const Complex<T>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <typename T>
T arg(const Complex<T>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

/// Principal square root (branch cut on the negative real axis, Re >= 0).
template <typename T>
Complex<T> sqrt(const Complex<T>& z) {
  using std::abs;
  using std::sqrt;
  const T m = abs(z);
  if (m == 0.0) return {z.re * 0.0, z.re * 0.0};
  if (z.re >= 0.0) {
    const T t = sqrt((m + z.re) * 0.5);
    return {t, z.im / (t * 2.0)};
  }
  const T t = sqrt((m - z.re) * 0.5);
  T im = z.im < 0.0 ? -t : t;
  return {z.im / (im * 2.0), im};
}

template <typename T>
Complex<T> pow(const Complex<T>& z, long n) {
  if (n < 0) return Complex<T>(z.re * 0.0 + 1.0) / pow(z, -n);
  Complex<T> result(z.re * 0.0 + 1.0);
  Complex<T> base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

using HPComplex = Complex<HPReal>;
using DComplex = Complex<double>;

}  // namespace srf
