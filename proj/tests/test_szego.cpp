#include "srf/errors.hpp"
#include "srf/szego.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace srf;

namespace {

constexpr Bits kBits = 256;

SystemParams params(const char* y) { return SystemParams::from_y(HPReal::parse(y, kBits)); }

HPComplex cx(double re, double im = 0.0) { return {HPReal(re, kBits), HPReal(im, kBits)}; }

HPComplex cx(const char* re) { return {HPReal::parse(re, kBits), HPReal::zero(kBits)}; }

std::vector<HPComplex> exterior_samples(std::size_t n, double rmin, double rmax, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> r(rmin, rmax);
  std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
  std::vector<HPComplex> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(HPComplex::polar(HPReal(r(rng), kBits), HPReal(t(rng), kBits)));
  return out;
}

}  // namespace

TEST(ConformalMap, PointValues) {
  const HPReal c(0.5, kBits);
  EXPECT_LE(abs(phi_map(c, cx(2.0)) - cx("1.6")), 1e-70);
  EXPECT_THROW(phi_map(c, cx(-0.5)), PoleError);
  EXPECT_THROW(Phi_map(c, cx(1.0)), OnArcError);
}

TEST(ConformalMap, InverseRoundTrip) {
  const HPReal c = params("0.13").capacity();
  for (const auto& w : exterior_samples(40, 1.01, 5.0, 7)) {
    const HPComplex z = phi_map(c, w);
    EXPECT_LE(abs(Phi_map(c, z) - w), abs(w) * 1e-60);
    EXPECT_LE(abs(Phi_prime(c, z) * phi_prime(c, w) - cx(1.0)), 1e-60);
    const HPComplex s = sqrt_Phi_prime(c, z);
    EXPECT_LE(abs(s * s - Phi_prime(c, z)), abs(s * s) * 1e-60);
    EXPECT_GT(abs(w), 1.0);
  }
}

TEST(ConformalMap, SqrtDerivativeAtInfinity) {
  const HPReal c = params("0.2").capacity();
  const HPComplex far = cx(1e30, 1e30);
  EXPECT_LE(abs(sqrt_Phi_prime(c, far) - cx(1.0) / sqrt(c)), 1e-25);
}

TEST(Kernel, InfinityAndHermitian) {
  const SystemParams p = params("0.1");
  const HPComplex kinf = szego_kernel(p, std::nullopt, std::nullopt);
  EXPECT_LE(abs(kinf - cx("0.2") / p.capacity()), 1e-70);
  const auto pts = exterior_samples(6, 1.2, 3.0, 11);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const HPComplex z = phi_map(p.capacity(), pts[i]);
    const HPComplex zeta = phi_map(p.capacity(), pts[i + 1]);
    const HPComplex a = szego_kernel(p, zeta, z);
    EXPECT_LE(abs(a - conj(szego_kernel(p, z, zeta))), abs(a) * 1e-60);
    const HPComplex b = szego_kernel(p, std::nullopt, z);
    EXPECT_LE(abs(b - conj(szego_kernel(p, z, std::nullopt))), abs(b) * 1e-60);
  }
}

TEST(Kernel, ReproducesConstantsAndKernels) {
  const SystemParams p = params("0.1");
  const auto one = [](const HPComplex&) { return cx(1.0); };
  EXPECT_LE(abs(reproduce(p, one, std::nullopt, 1e-20, kBits).value - cx(1.0)), 1e-18);
  const HPComplex z = phi_map(p.capacity(), cx(1.5, 0.7));
  EXPECT_LE(abs(reproduce(p, one, z, 1e-20, kBits).value - cx(1.0)), 1e-18);

  // F = K(., infinity) as a function of w on the circle.
  const HPReal c = p.capacity();
  const HPReal scale = p.arc_length() / HPReal::pi(kBits) / sqrt(c);
  const auto kinf = [&](const HPComplex& w) { return sqrt_Phi_prime_at(c, w) * scale; };
  const HPComplex got = reproduce(p, kinf, z, 1e-20, kBits).value;
  const HPComplex want = szego_kernel(p, z, std::nullopt);
  EXPECT_LE(abs(got - want), abs(want) * 1e-16);
}

TEST(OrthoPolys, LeadingCoefficientsAndOrthonormality) {
  const SystemParams p = params("0.1");
  const OrthoPolyTable t = leading_coeffs(p, 3, kBits);
  const HPReal k1 = t.k_values[1];
  const HPReal want = HPReal::parse("0.032468790724921017800", kBits);
  EXPECT_LE(abs(HPReal::one(kBits) / (k1 * k1) - want), want * 1e-18);
  EXPECT_GE(HPReal::one(kBits) / (k1 * k1), HPReal::parse("0.019141119226432269337", kBits));
  EXPECT_LE(HPReal::one(kBits) / (k1 * k1), HPReal::parse("0.14095723306995771230", kBits));
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      std::vector<HPComplex> a;
      std::vector<HPComplex> b;
      for (int d = 0; d <= 3; ++d) {
        a.emplace_back(t.coefficients(static_cast<std::size_t>(i), static_cast<std::size_t>(d)));
        b.emplace_back(t.coefficients(static_cast<std::size_t>(j), static_cast<std::size_t>(d)));
      }
      const HPComplex ip = arc_inner_product(a, b, p, kBits, 8, 1e-30).value;
      EXPECT_LE(abs(ip - cx(i == j ? 1.0 : 0.0)), 1e-20) << i << "," << j;
    }
  }
}

TEST(OrthoPolys, PrecisionExhaustionReportsPivot) {
  try {
    leading_coeffs(params("0.05"), 30, 64);
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_GT(e.pivot(), 2u);
  }
}

TEST(Laurent, MapSeries) {
  const HPReal c(0.5, kBits);
  const LaurentSeries in = interior_map_series(c, 120);
  EXPECT_LE(abs(in.evaluate(cx(2.0)) - cx("1.6")), 1e-30);
  const HPReal cap = params("0.15").capacity();
  const LaurentSeries ex = exterior_map_series(cap, 80);
  const HPComplex z = cx(6.0, 3.0);
  EXPECT_LE(abs(ex.evaluate(z) - Phi_map(cap, z)), 1e-20);
  EXPECT_LE(abs(ex.coefficient(1) - cx(1.0) / cap), 1e-70);
  EXPECT_LE(abs(ex.coefficient(0) - (cap * cap - 1.0) / cap), 1e-70);
}

TEST(Laurent, ProductTruncation) {
  const HPReal c = params("0.2").capacity();
  const LaurentSeries ex = exterior_map_series(c, 20);
  const LaurentSeries sq = ex * ex;
  EXPECT_EQ(sq.top_degree(), 2);
  EXPECT_EQ(sq.low_degree(), -19);
  EXPECT_FALSE(sq.exact());
  const LaurentSeries one(0, {cx(1.0)}, HPReal::zero(kBits), true);
  const LaurentSeries same = one * ex;
  EXPECT_EQ(same.low_degree(), ex.low_degree());
  EXPECT_TRUE(pow(ex, 0).exact());
}

TEST(Faber, DegreeTwoClosedForm) {
  const SystemParams p = params("0.1");
  const HPReal c = p.capacity();
  const std::vector<HPComplex> f = faber_poly(p, 2, 12, kBits);
  ASSERT_EQ(f.size(), 3u);
  const HPReal a0 = (c * c - 1.0) / c;
  const HPReal d1 = c * (1.0 - c * c);
  EXPECT_LE(abs(f[0] - cx(0.0) - HPComplex(a0 * a0 + d1 * 2.0 / c, HPReal::zero(kBits))), 1e-60);
  EXPECT_LE(abs(f[1] - HPComplex(a0 * 2.0 / c, HPReal::zero(kBits))), 1e-60);
  EXPECT_LE(abs(f[2] - HPComplex(HPReal::one(kBits) / (c * c), HPReal::zero(kBits))), 1e-60);
  EXPECT_THROW(faber_poly(p, 2, 11, kBits), DomainError);
}

TEST(Faber, GrunskyBoundFarOut) {
  const SystemParams p = params("0.2");
  const HPReal c = p.capacity();
  for (int n = 1; n <= 5; ++n) {
    const std::vector<HPComplex> f = faber_poly(p, n, n + 40, kBits);
    for (const auto& w : exterior_samples(4, 1e3, 1e3 + 1.0, 100 + static_cast<unsigned>(n))) {
      const HPComplex diff = poly_eval(f, phi_map(c, w)) - pow(w, n);
      const HPReal r2 = HPReal::one(kBits) / norm2(w);
      const HPReal bound = sqrt(HPReal(static_cast<double>(n), kBits)) * sqrt(-log(1.0 - r2));
      EXPECT_LE(abs(diff), bound) << n;
    }
  }
}

TEST(BoundSuite, AllChecksHoldOnSmallSample) {
  SuiteOptions o;
  o.n_max = 3;
  o.arc_samples = 200;
  o.polynomials = 8;
  o.points = 5;
  const SzegoSuite s = bound_suite(params("0.1"), o);
  for (const auto& ch : s.checks) EXPECT_TRUE(ch.satisfied) << ch.name;
  EXPECT_EQ(s.trend.size(), 4u);
  EXPECT_GT(s.exterior_points, 0u);
}
