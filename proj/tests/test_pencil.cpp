#include "srf/errors.hpp"
#include "srf/pencil.hpp"

#include <gtest/gtest.h>

using namespace srf;

TEST(Hilbert, Entries) {
  const Matrix<Rational> h = hilbert_matrix(4);
  EXPECT_EQ(h(0, 0), Rational(1));
  EXPECT_EQ(h(1, 2), Rational(1, 4));
  EXPECT_EQ(h(4, 4), Rational(1, 9));
  EXPECT_THROW(hilbert_matrix(13), DomainError);
}

TEST(Hilbert, ExactInverse) {
  const Matrix<Rational> inv = exact_inverse(hilbert_matrix(2));
  const long want[3][3] = {{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(inv(i, j), Rational(want[i][j]));
  for (int n = 0; n <= 12; ++n) {
    const Matrix<Rational> h = hilbert_matrix(n);
    const Matrix<Rational> prod = h * exact_inverse(h);
    EXPECT_TRUE(prod == Matrix<Rational>::identity(h.rows(), Rational(0), Rational(1))) << n;
  }
}

TEST(Vandermonde, Examples) {
  EXPECT_EQ(vandermonde_lastrow_exact({0, 1}), (std::vector<Rational>{Rational(-1), Rational(1)}));
  EXPECT_EQ(vandermonde_lastrow_exact({0, 1, 2}), (std::vector<Rational>{Rational(1, 2), Rational(-1), Rational(1, 2)}));
  EXPECT_THROW(vandermonde_lastrow_exact({0, 1, 1}), SingularSystem);
}

TEST(Vandermonde, DefiningIdentityAndVietaMagnitudes) {
  for (const std::vector<long>& t : {std::vector<long>{0, 1, 3}, {0, 2, 3, 7}, {-2, 0, 5, 6, 9}, {0, 1, 2, 3, 4, 5}}) {
    const std::vector<Rational> m = vandermonde_lastrow_exact(t);
    const std::size_t n = t.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j <= n; ++j) {
        Rational p(1);
        for (std::size_t e = 0; e < i; ++e) p *= t[j];
        s += m[j] * p;
      }
      EXPECT_EQ(s, Rational(i == n ? 1 : 0));
    }
    const std::vector<Rational> v = vieta_magnitudes(t);
    for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(abs(m[j]), v[j]);
  }
}

TEST(Pencil, TwoAtoms) {
  const PencilData p = pencil_mu({0, 1}, 256);
  EXPECT_EQ(p.hilbert_inverse(0, 0), Rational(4));
  EXPECT_EQ(p.hilbert_inverse(0, 1), Rational(-6));
  EXPECT_EQ(p.hilbert_inverse(1, 1), Rational(12));
  EXPECT_EQ(p.quadratic_form, Rational(28));
  const HPReal pi = HPReal::pi(256);
  EXPECT_LE(abs(p.c_n - pi * pi * 4.0), ulp_scale(240));
  const HPReal want = HPReal::one(256) / (pi * pi * 112.0);
  EXPECT_LE(abs(p.mu - want), want * ulp_scale(240));
  EXPECT_LE(abs(p.mu - HPReal::parse("9.0465342537801581646e-4", 256)), 1e-22);
}

TEST(Pencil, ThreeAtoms) {
  const PencilData p = pencil_mu({0, 1, 2}, 256);
  EXPECT_EQ(p.quadratic_form, Rational(1881, 4));
  const HPReal pi = HPReal::pi(256);
  EXPECT_LE(abs(p.c_n - pow(pi, 4) * 4.0), ulp_scale(230));
  EXPECT_LE(abs(p.mu - HPReal::parse("5.4577258132293116370e-6", 256)), 1e-24);
}

TEST(Pencil, PositiveForEverySupport) {
  for (const SupportSet& t : {SupportSet{0, 3}, SupportSet{0, 1, 5}, SupportSet{0, 2, 3, 9}, SupportSet::contiguous(8)}) {
    EXPECT_GT(pencil_mu(t, 256).mu, 0.0) << t.to_string();
  }
  EXPECT_THROW(pencil_mu({4}, 256), DomainError);
}

TEST(Pencil, LimitConstantMatchesSmallestEigenvalue) {
  const HPReal pi = HPReal::pi(256);
  EXPECT_LE(abs(pencil_mu({0, 1}, 256).limit_mu - pi * pi / 6.0), ulp_scale(240));
  EXPECT_LE(abs(pencil_mu({0, 1, 2}, 256).limit_mu - pow(pi, 4) * 4.0 / 270.0), ulp_scale(230));
}
