#include "srf/complex.hpp"
#include "srf/errors.hpp"
#include "srf/hp_real.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace srf;

TEST(HPReal, BinaryResultTakesWiderPrecision) {
  const HPReal a(1.0, 128);
  const HPReal b(3.0, 512);
  EXPECT_EQ((a / b).precision(), 512);
  EXPECT_EQ((a + a).precision(), 128);
}

TEST(HPReal, ParseRoundTripIsLossless) {
  for (Bits bits : {64L, 128L, 256L, 1024L}) {
    const HPReal x = HPReal::parse("0.1", bits) / HPReal(3L, bits);
    const HPReal back = HPReal::parse(x.to_string(), bits);
    EXPECT_TRUE(back == x) << bits;
  }
}

TEST(HPReal, ParseRejectsGarbage) {
  EXPECT_THROW(HPReal::parse("", 128), DomainError);
  EXPECT_THROW(HPReal::parse("0.1x", 128), DomainError);
  EXPECT_THROW(HPReal::parse("abc", 128), DomainError);
}

TEST(HPReal, ElementaryFunctionsAtPrecision) {
  const Bits bits = 256;
  const HPReal pi = HPReal::pi(bits);
  // sin(pi/6) = 1/2 to within a few ulps
  EXPECT_LT(abs(sin(pi / 6.0) - 0.5), ulp_scale(bits - 3));
  EXPECT_LT(abs(sqrt(HPReal(2L, bits)) * sqrt(HPReal(2L, bits)) - 2.0), ulp_scale(bits - 3));
  EXPECT_LT(abs(atan2(HPReal::one(bits), HPReal::one(bits)) * 4.0 - pi), ulp_scale(bits - 3));
}

TEST(HPReal, ComparisonsAreExact) {
  const HPReal a = HPReal::one(256);
  const HPReal b = a + ldexp(HPReal::one(256), -250);
  EXPECT_TRUE(a < b);
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(a == 1.0);
}

TEST(HPReal, PrecisionScopeRestores) {
  const Bits before = default_precision();
  {
    PrecisionScope scope(512);
    EXPECT_EQ(default_precision(), 512);
    EXPECT_EQ(HPReal(1.0).precision(), 512);
  }
  EXPECT_EQ(default_precision(), before);
}

TEST(HPReal, EnvironmentDefault) {
  ::setenv("SRF_PRECISION_BITS", "384", 1);
  EXPECT_EQ(precision_from_environment(), 384);
  ::setenv("SRF_PRECISION_BITS", "12", 1);
  EXPECT_EQ(precision_from_environment(), 256);
  ::unsetenv("SRF_PRECISION_BITS");
  EXPECT_EQ(precision_from_environment(), 256);
}

TEST(Complex, PrincipalSqrtAndDivision) {
  const Bits bits = 128;
  const HPComplex z(HPReal(-4.0, bits), HPReal(0.0, bits));
  const HPComplex r = sqrt(z);
  EXPECT_LT(abs(r.re), ulp_scale(100));
  EXPECT_LT(abs(r.im - 2.0), ulp_scale(100));
  const HPComplex a(HPReal(1.0, bits), HPReal(2.0, bits));
  const HPComplex b(HPReal(3.0, bits), HPReal(-4.0, bits));
  const HPComplex q = a / b * b;
  EXPECT_LT(abs(q - a), ulp_scale(100));
  // Negative imaginary part stays on the lower half.
  EXPECT_LT(sqrt(HPComplex(HPReal(-1.0, bits), HPReal(-1e-30, bits))).im, 0.0);
}
