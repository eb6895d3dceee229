#include "srf/errors.hpp"
#include "srf/recovery.hpp"

#include <gtest/gtest.h>

using namespace srf;

namespace {

constexpr Bits kBits = 256;

SystemParams params(const char* y) { return SystemParams::from_y(HPReal::parse(y, kBits)); }

HPReal hp(double v) { return HPReal(v, kBits); }

MeasurementVector measure(const SystemParams& p, const SupportSet& t, const std::vector<double>& v,
                          const SupportSet& window) {
  std::vector<HPReal> x;
  for (double d : v) x.push_back(hp(d));
  return synthesize(p, CoefficientVector::real(t, x), window);
}

}  // namespace

TEST(L0Solve, RecoversExactSparseSignal) {
  const SystemParams p = params("0.2");
  const SupportSet window = SupportSet::contiguous(8);
  const MeasurementVector f = measure(p, {1, 5}, {1.0, -0.7}, window);
  const RecoveryResult r = l0_solve(p, f, hp(1e-20), 3, kBits);
  EXPECT_EQ(r.support, (SupportSet{1, 5}));
  EXPECT_EQ(r.sparsity, 2u);
  EXPECT_LE(r.residual, hp(1e-20));
  EXPECT_LE(abs(r.estimate.values[0].re - 1.0), 1e-40);
  EXPECT_LE(abs(r.estimate.values[1].re + 0.7), 1e-40);
}

TEST(L0Solve, ZeroSignalAndLargeTolerance) {
  const SystemParams p = params("0.2");
  const SupportSet window = SupportSet::contiguous(5);
  const MeasurementVector f = measure(p, {2}, {0.5}, window);
  const RecoveryResult r = l0_solve(p, f, hp(1.0), 2, kBits);
  EXPECT_EQ(r.sparsity, 0u);
  EXPECT_TRUE(r.support.empty());
}

TEST(L0Solve, Failures) {
  const SystemParams p = params("0.2");
  const SupportSet window = SupportSet::contiguous(6);
  MeasurementVector f = measure(p, {0, 2, 4}, {1.0, 1.0, 1.0}, window);
  EXPECT_THROW(l0_solve(p, f, hp(1e-30), 1, kBits), Infeasible);
  f.rho = hp(0.5);
  EXPECT_THROW(l0_solve(p, f, hp(0.1), 3, kBits), Infeasible);
  const MeasurementVector big = measure(p, {0}, {1.0}, SupportSet::contiguous(20));
  EXPECT_THROW(l0_solve(p, big, hp(1e-30), 2, kBits), BudgetExceeded);
}

TEST(LeastSquares, SchurResidualMatchesDirectResidual) {
  const SystemParams p = params("0.25");
  const SupportSet window = SupportSet::contiguous(6);
  const MeasurementVector f = measure(p, {0, 1, 3, 4}, {1.0, -2.0, 0.5, 0.25}, window);
  const GramMatrix g = build_gram(p, window, kBits);
  const HPReal norm = measurement_norm(p, f, kBits);
  const SupportSet t{0, 3};
  const auto [res2, x] = least_squares_residual(f, g.entries, norm * norm, t, kBits);
  std::vector<HPComplex> fit = CoefficientVector(t, x).embedded(window, kBits);
  const std::vector<HPComplex> r = difference(f.coeffs, fit);
  const HPReal direct = quadratic_form(g.entries, r);
  EXPECT_LE(abs(res2 - direct), 1e-50);
  EXPECT_GT(res2, 0.0);
}

TEST(Adversary, PairProperties) {
  const SystemParams p = params("0.1");
  const HPReal sigma = hp(1e-3);
  const AdversarialPair a = adversarial_pair(p, 2, sigma, kBits);
  EXPECT_EQ(a.t_star.size(), 4u);
  EXPECT_EQ(a.x0.sparsity(), 2u);
  EXPECT_EQ(a.x1.sparsity(), 2u);
  const SupportSet window = a.t_star;
  const auto d = difference(a.x0.embedded(window, kBits), a.x1.embedded(window, kBits));
  HPReal dn = HPReal::zero(kBits);
  for (const auto& z : d) dn += norm2(z);
  EXPECT_LE(abs(sqrt(dn) * a.eps2k / sigma - 1.0), 1e-20);
  const HPReal image = sqrt(quadratic_form(build_gram(p, window, kBits).entries, d));
  EXPECT_LE(image, sigma * (hp(1.0) + HPReal::parse("1e-20", kBits)));
}

TEST(Adversary, StrictTiesThrow) {
  // With two atoms the singular vector is (1, -1)/sqrt 2: a perfect tie.
  const SystemParams p = params("0.1");
  const AdversarialPair a = adversarial_pair(p, 1, hp(1e-3), kBits);
  EXPECT_TRUE(a.threshold_tie);
  EXPECT_EQ(a.x1.support, (SupportSet{0}));
  AdversaryOptions o;
  o.strict_ties = true;
  EXPECT_THROW(adversarial_pair(p, 1, hp(1e-3), kBits, o), TieInThreshold);
}

TEST(Minimax, SandwichHolds) {
  const MinimaxReport m = minimax_experiment(params("0.15"), 2, hp(1e-4), kBits);
  for (const auto& ch : m.checks) EXPECT_TRUE(ch.satisfied) << ch.name;
  EXPECT_LE(m.error_x0, m.upper_bound);
  EXPECT_GE(max(m.error_x0, m.error_x1), m.lower_bound);
  EXPECT_EQ(m.window.size(), m.pair.t_star.span() + 5u);
}

TEST(Scaling, SlopeNearTheory) {
  std::vector<HPReal> grid;
  for (double s : {20.0, 40.0, 80.0, 160.0}) grid.push_back(hp(s));
  const ScalingResult r = srf_scaling(1, grid, kBits);
  EXPECT_NEAR(r.slope, -1.0, 0.02);
  EXPECT_EQ(r.rows.size(), 4u);
}
