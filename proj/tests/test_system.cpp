#include "srf/errors.hpp"
#include "srf/linalg.hpp"
#include "srf/quadrature.hpp"
#include "srf/system.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace srf;

namespace {

HPReal hp(const char* s, Bits bits = 256) { return HPReal::parse(s, bits); }

void expect_rel(const HPReal& got, const char* want, double rel) {
  const HPReal w = hp(want, got.precision());
  EXPECT_LE(abs(got - w), abs(w) * rel) << got.to_string(25) << " vs " << want;
}

SystemParams params(const char* y, Bits bits = 256) { return SystemParams::from_y(hp(y, bits)); }

}  // namespace

TEST(SystemParams, Validation) {
  EXPECT_THROW(params("0"), DomainError);
  EXPECT_THROW(params("0.5"), DomainError);
  EXPECT_THROW(params("-0.1"), DomainError);
  EXPECT_THROW(SystemParams::from_srf(hp("2")), DomainError);
  const SystemParams p = SystemParams::from_srf(hp("8"));
  EXPECT_TRUE(p.y() == 0.125);
  EXPECT_LE(abs(p.srf() * p.y() - 1.0), ulp_scale(250));
}

TEST(SystemParams, DerivedQuantities) {
  const SystemParams p = params("0.1");
  expect_rel(p.arc_length(), "0.62831853071795864769252867665590057683943", 1e-40);
  EXPECT_TRUE(p.capacity() < sin(HPReal::pi(256) / 4.0));
}

TEST(Capacity, Examples) {
  EXPECT_LE(abs(capacity(HPReal::one(256) / 3.0, 256) - 0.5), ulp_scale(250));
  expect_rel(capacity(hp("0.1"), 256), "0.15643446504023086901", 1e-19);
  // c(y) / (pi y / 2) -> 1
  const HPReal y = hp("1e-8");
  EXPECT_LT(abs(capacity(y, 256) / (HPReal::pi(256) * y * 0.5) - 1.0), 1e-15);
  EXPECT_THROW(capacity(hp("0.7"), 256), DomainError);
}

TEST(GramEntry, Examples) {
  const SystemParams p = params("0.1");
  EXPECT_TRUE(gram_entry(p, 0, 256) == 1.0);
  expect_rel(gram_entry(p, 1, 256), "0.98363164308346596735", 1e-19);
  expect_rel(gram_entry(p, 2, 256), "0.93548928378863903321", 1e-19);
}

TEST(GramEntry, EvenAndBounded) {
  const SystemParams p = params("0.23");
  for (long m = 1; m <= 40; ++m) {
    const HPReal g = gram_entry(p, m, 256);
    EXPECT_TRUE(g == gram_entry(p, -m, 256));
    EXPECT_LT(abs(g), 1.0);
  }
}

TEST(GramEntry, AgreesWithQuadratureOfDefiningIntegral) {
  // <a_j1, a_j2> = (1/2 pi y) int_{-pi y}^{pi y} cos((j1 - j2) theta) d theta
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick(-10, 10);
  const Bits bits = 128;
  for (const char* y : {"0.07", "0.19", "0.41"}) {
    const SystemParams p = params(y, bits);
    const HPReal half = HPReal::pi(bits) * p.y();
    for (int trial = 0; trial < 20; ++trial) {
      const long m = pick(rng) - pick(rng);
      const auto q = integrate_doubling([&](const HPReal& t) { return cos(t * static_cast<double>(m)); }, -half, half,
                                        1e-30, bits);
      const HPReal value = q.value / (half * 2.0);
      const HPReal g = gram_entry(p, m, bits);
      EXPECT_LE(abs(value - g), abs(g) * 1e-12) << "m=" << m << " y=" << y;
    }
  }
}

TEST(BuildGram, Examples) {
  const SystemParams p = params("0.1");
  const GramMatrix single = build_gram(p, {5}, 256);
  ASSERT_EQ(single.order(), 1u);
  EXPECT_TRUE(single.entries(0, 0) == 1.0);

  const GramMatrix two = build_gram(p, {0, 1}, 256);
  expect_rel(two.entries(0, 1), "0.98363164308346596735", 1e-19);
  EXPECT_TRUE(two.entries(0, 1) == two.entries(1, 0));

  EXPECT_TRUE(build_gram(p, {0, 1, 2}, 256).entries == build_gram(p, {7, 8, 9}, 256).entries);
  EXPECT_THROW(build_gram(p, SupportSet{}, 256), DomainError);
}

TEST(BuildGram, InvariantsOnRandomSupports) {
  std::mt19937_64 rng(11);
  const SystemParams p = params("0.17");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> offs;
    for (long t = 0; t < 15; ++t)
      if (rng() % 3 == 0) offs.push_back(t);
    if (offs.empty()) offs.push_back(0);
    const GramMatrix g = build_gram(p, SupportSet(offs), 256);
    for (std::size_t i = 0; i < g.order(); ++i) {
      EXPECT_TRUE(g.entries(i, i) == 1.0);
      for (std::size_t j = 0; j < g.order(); ++j) {
        EXPECT_TRUE(g.entries(i, j) == g.entries(j, i));
        EXPECT_LE(abs(g.entries(i, j)), 1.0);
      }
    }
    EXPECT_NO_THROW(hp_cholesky(g.entries, 256));
  }
}

TEST(BuildGram, TranslationAndReflectionPreserveSpectrum) {
  const SystemParams p = params("0.12");
  const SupportSet t{0, 1, 3, 7};
  const auto base = hp_symmetric_eigen(build_gram(p, t, 256).entries, 256).values;
  for (const SupportSet& other : {t.translated(13), t.reflected()}) {
    const auto v = hp_symmetric_eigen(build_gram(p, other, 256).entries, 256).values;
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_LE(abs(v[i] - base[i]), abs(base[i]) * 1e-60);
  }
}

TEST(Synthesize, Examples) {
  const SystemParams p = params("0.1");
  const SupportSet window = SupportSet::contiguous(6);
  const MeasurementVector f = synthesize(p, CoefficientVector::real({3}, {HPReal(2.0, 256)}), window);
  ASSERT_EQ(f.coeffs.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(f.coeffs[i].re == (i == 3 ? 2.0 : 0.0));
  EXPECT_TRUE(f.rho == 0.0);

  const MeasurementVector zero = synthesize(p, CoefficientVector::real({1}, {HPReal(0.0, 256)}), window);
  EXPECT_TRUE(measurement_norm(p, zero, 256) == 0.0);

  const MeasurementVector pair =
      synthesize(p, CoefficientVector::real({0, 1}, {HPReal(1.0, 256), HPReal(1.0, 256)}), SupportSet{0, 1});
  const HPReal n = measurement_norm(p, pair, 256);
  expect_rel(n * n, "3.9672632861669319347", 1e-19);

  EXPECT_THROW(synthesize(p, CoefficientVector::real({9}, {HPReal(1.0, 256)}), window), SupportNotContained);
}

TEST(MeasurementNorm, Examples) {
  const SystemParams p = params("0.1");
  MeasurementVector one{{4}, {HPComplex(HPReal(1.0, 256))}, HPReal(0.0, 256)};
  EXPECT_TRUE(measurement_norm(p, one, 256) == 1.0);

  MeasurementVector rho_only{{0, 1}, {HPComplex(HPReal(0.0, 256)), HPComplex(HPReal(0.0, 256))}, hp("0.3")};
  EXPECT_LE(abs(measurement_norm(p, rho_only, 256) - hp("0.3")), ulp_scale(250));

  MeasurementVector diff{{0, 1}, {HPComplex(HPReal(1.0, 256)), HPComplex(HPReal(-1.0, 256))}, HPReal(0.0, 256)};
  expect_rel(measurement_norm(p, diff, 256), "0.18093289870299449029", 1e-19);
}

TEST(CoefficientVector, Validation) {
  EXPECT_THROW(CoefficientVector(SupportSet{0, 1}, {HPComplex(HPReal(1.0))}), DomainError);
  const CoefficientVector x = CoefficientVector::real({0, 2, 5}, {HPReal(1.0), HPReal(0.0), HPReal(-2.0)});
  EXPECT_EQ(x.sparsity(), 2u);
  EXPECT_LE(abs(x.l2_norm(256) - sqrt(HPReal(5L, 256))), ulp_scale(250));
}
