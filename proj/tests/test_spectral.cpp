#include "srf/errors.hpp"
#include "srf/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace srf;

namespace {

SystemParams params(const char* y, Bits bits = 256) { return SystemParams::from_y(HPReal::parse(y, bits)); }

void expect_rel(const HPReal& got, const char* want, double tol) {
  const HPReal w = HPReal::parse(want, got.precision());
  EXPECT_LE(abs(got - w), abs(w) * tol) << got.to_string(25) << " vs " << want;
}

}  // namespace

TEST(SigmaMin, OracleValues) {
  expect_rel(sigma_min(params("0.1"), {0, 1}), "0.12793887961262609342", 1e-15);
  expect_rel(sigma_min(params("0.1"), {0, 5}), "0.60281027498908697428", 1e-15);
  expect_rel(gram_min_eig(params("0.1"), {0, 1, 2}).value, "1.4542256671195348144e-4", 1e-14);
  expect_rel(gram_min_eig(params("0.05"), {0, 1, 2}).value, "9.0369544747775640776e-6", 1e-14);
  expect_rel(gram_min_eig(params("0.05"), {0, 1, 3}).value, "3.4933709938496414422e-5", 1e-14);
  EXPECT_TRUE(sigma_min(params("0.1"), {7}) == 1.0);
}

TEST(SigmaMin, TranslationAndReflectionInvariant) {
  const SystemParams p = params("0.17");
  const SupportSet t{0, 2, 3, 7};
  const HPReal base = sigma_min(p, t);
  EXPECT_LE(abs(sigma_min(p, t.translated(11)) - base), base * 1e-20);
  EXPECT_LE(abs(sigma_min(p, t.reflected()) - base), base * 1e-20);
}

TEST(SearchModeText, RoundTrip) {
  EXPECT_EQ(parse_search_mode("contiguous"), SearchMode::contiguous);
  EXPECT_EQ(parse_search_mode(to_string(SearchMode::exhaustive)), SearchMode::exhaustive);
  EXPECT_THROW(parse_search_mode("greedy"), DomainError);
}

TEST(Epsilon, SmallCases) {
  const SystemParams p = params("0.1");
  const EpsilonResult e1 = epsilon(p, 1, SearchMode::exhaustive, 4);
  EXPECT_TRUE(e1.value == 1.0);
  EXPECT_EQ(e1.attaining_support, SupportSet{0});

  const EpsilonResult c2 = epsilon(p, 2, SearchMode::contiguous, 0);
  expect_rel(c2.value, "0.12793887961262609342", 1e-15);

  const EpsilonResult x2 = epsilon(p, 2, SearchMode::exhaustive, 6);
  EXPECT_EQ(x2.attaining_support, (SupportSet{0, 1}));
  EXPECT_EQ(x2.supports_examined, 6u);
  EXPECT_LE(abs(x2.value - c2.value), c2.value * 1e-20);
}

TEST(Epsilon, ExhaustiveAgreesWithContiguous) {
  const EpsilonResult x2 = epsilon(params("0.1"), 2, SearchMode::exhaustive, 10);
  EXPECT_EQ(x2.attaining_support, (SupportSet{0, 1}));
  expect_rel(x2.value, "0.12793887961262609342", 1e-15);
  const SystemParams p = params("0.05");
  const EpsilonResult c3 = epsilon(p, 3, SearchMode::contiguous, 0);
  const EpsilonResult x3 = epsilon(p, 3, SearchMode::exhaustive, 10);
  EXPECT_EQ(x3.attaining_support, (SupportSet{0, 1, 2}));
  EXPECT_LE(abs(x3.value - c3.value), c3.value * 1e-20);
  EXPECT_EQ(x3.supports_examined, 45u);
}

TEST(Epsilon, NonincreasingInK) {
  const SystemParams p = params("0.2");
  HPReal prev = HPReal::one(256);
  for (int k = 1; k <= 5; ++k) {
    const EpsilonResult e = epsilon(p, k, SearchMode::exhaustive, k + 2);
    EXPECT_LE(e.value, prev) << k;
    EXPECT_GT(e.value, 0.0);
    EXPECT_LE(e.value, 1.0);
    prev = e.value;
  }
}

TEST(Epsilon, RejectsBadArguments) {
  EXPECT_THROW(epsilon(params("0.1"), 0, SearchMode::contiguous, 0), DomainError);
  EXPECT_THROW(epsilon(params("0.1"), 4, SearchMode::exhaustive, 2), DomainError);
}

TEST(Spark, Levels) {
  const SystemParams p = params("0.1");
  EXPECT_EQ(eps_spark(p, HPReal(1.1, 256), 4, SearchMode::contiguous, 0).value, 0);
  const SparkResult a = eps_spark(p, HPReal(0.5, 256), 4, SearchMode::contiguous, 0);
  EXPECT_EQ(a.value, 1);
  EXPECT_FALSE(a.saturated);
  const SparkResult b = eps_spark(p, HPReal(0.1, 256), 4, SearchMode::contiguous, 0);
  EXPECT_EQ(b.value, 2);
  const SparkResult c = eps_spark(p, HPReal(1e-30, 256), 3, SearchMode::contiguous, 0);
  EXPECT_EQ(c.value, 3);
  EXPECT_TRUE(c.saturated);
}

TEST(SrfBounds, ChainAndRatio) {
  const SrfBounds b = verify_srf_bounds(params("0.1"), 4, 256);
  EXPECT_TRUE(all_satisfied(b.checks));
  ASSERT_EQ(b.rows.size(), 5u);
  EXPECT_EQ(b.min_ratio_n, 1);
  expect_rel(b.min_ratio, "3.2713732125391561667", 1e-15);
  expect_rel(b.rows[1].upper, "0.62573786016092347604", 1e-18);
  expect_rel(b.rows[1].k_inv * b.rows[1].k_inv, "0.032468790724921017800", 1e-15);
  EXPECT_TRUE(b.rows[0].ratio == 1.0);
  for (std::size_t n = 1; n < b.rows.size(); ++n) EXPECT_GT(b.rows[n].ratio, 1.0);
}

TEST(Contiguity, ThreeAtoms) {
  const ContiguityScan s = contiguity_scan(params("0.1"), 3, 6);
  EXPECT_TRUE(s.holds);
  EXPECT_EQ(s.table.front().support, (SupportSet{0, 1, 2}));
  EXPECT_EQ(s.monotone_violations, 0u);
  EXPECT_GT(s.monotone_pairs, 0u);
  for (std::size_t i = 1; i < s.table.size(); ++i) EXPECT_LE(s.table[i - 1].sigma, s.table[i].sigma);
}

TEST(Contiguity, BudgetExceeded) {
  EXPECT_THROW(contiguity_scan(params("0.1"), 4, 20, 10), BudgetExceeded);
}

TEST(SmallY, TwoAtomExponentAndConstant) {
  std::vector<HPReal> grid;
  for (const char* y : {"0.02", "0.01", "0.005", "0.0025"}) grid.push_back(HPReal::parse(y, 256));
  const SmallYFit fit = smally_exponent({0, 1}, grid, 256);
  EXPECT_NEAR(fit.alpha, 2.0, 1e-3);
  EXPECT_NEAR(fit.mu_fit, M_PI * M_PI / 6.0, 2e-3);
  ASSERT_TRUE(fit.pencil.has_value());
  EXPECT_EQ(fit.pencil->quadratic_form, Rational(28));
  EXPECT_THROW(smally_exponent({0, 1}, {grid[0], grid[1], grid[2]}, 256), DomainError);
  grid[0] = HPReal::parse("0.1", 256);
  EXPECT_THROW(smally_exponent({0, 1}, grid, 256), DomainError);
}

TEST(LinearFit, ExactLine) {
  const auto [slope, intercept] = linear_fit({0.0, 1.0, 2.0, 3.0}, {1.0, 3.0, 5.0, 7.0});
  EXPECT_NEAR(slope, 2.0, 1e-14);
  EXPECT_NEAR(intercept, 1.0, 1e-14);
}

TEST(SmallY, EigenvalueApproachesLimitConstant) {
  for (const SupportSet& t : {SupportSet{0, 1}, SupportSet{0, 1, 2}, SupportSet{0, 1, 3}, SupportSet{0, 2, 3, 7}}) {
    const PencilData pd = pencil_mu(t, 256);
    const HPReal y = HPReal::parse("1e-4", 256);
    const HPReal scaled = gram_min_eig(SystemParams::from_y(y), t).value / pow(y, 2L * pd.n);
    EXPECT_LE(abs(scaled - pd.limit_mu), pd.limit_mu * 1e-4) << t.to_string();
    EXPECT_GT(abs(scaled - pd.mu), pd.mu) << t.to_string();
  }
}
