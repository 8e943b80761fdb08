#include "qadv/verifier.hpp"

#include "qadv/certificates.hpp"
#include "qadv/named_functions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace qadv {
namespace {

// min |2t - N + 1| over levels where the profile changes.
int oracle_gamma(const std::vector<Value>& profile) {
  const int n = static_cast<int>(profile.size()) - 1;
  int best = n + 1;
  for (int t = 0; t < n; ++t) {
    if (profile[t] != profile[t + 1]) best = std::min(best, std::abs(2 * t - n + 1));
  }
  return best;
}

TEST(Verifier, ConversionOnRandomRelations) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const ConversionCheck c = verify_conversion(RelationInstance::from_table(f, pairs));
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.alb2_squared, c.alb3_squared);
  }
}

TEST(Verifier, SchemeLimitsOnUniformSchemes) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const RelationInstance rel = RelationInstance::from_table(f, pairs);
    const SchemeLimits limits = verify_scheme_limits(f, rel, WeightScheme::uniform(rel));
    EXPECT_TRUE(limits.all_pass());
    const auto ref = oracle::cert_stats(f);
    EXPECT_EQ(limits.thm7.ceiling, Rational(3 * std::min(ref.c0, ref.c1)));
    EXPECT_EQ(limits.thm10.ceiling, Rational(ref.c0 * ref.c1));
  }
}

TEST(Verifier, PartialFunctionsSkipTotalOnlyChecks) {
  const FunctionTable f = FunctionTable::from_symbols(2, 2, "01*1");
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}, {0, 3}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  const SchemeLimits limits = verify_scheme_limits(f, rel, WeightScheme::uniform(rel));
  EXPECT_EQ(limits.thm7.verdict, Verdict::Pass);
  EXPECT_EQ(limits.thm9.verdict, Verdict::NotApplicable);
  EXPECT_EQ(limits.thm10.verdict, Verdict::NotApplicable);
  EXPECT_TRUE(limits.all_pass());
}

TEST(Verifier, SweepTwoVariables) {
  const SweepResult r = sweep_total_functions(2, {});
  ASSERT_EQ(r.rows.size(), 14u);
  EXPECT_EQ(r.failures, 0);
  for (const SweepRow& row : r.rows) {
    const FunctionTable f(2, 2, [&] {
      std::vector<Value> v(4);
      for (int t = 0; t < 4; ++t) v[t] = (row.id >> t) & 1 ? Value::One : Value::Zero;
      return v;
    }());
    const auto ref = oracle::cert_stats(f);
    EXPECT_EQ(row.c0, ref.c0);
    EXPECT_EQ(row.c1, ref.c1);
    EXPECT_LE(row.best_bound_squared, Rational(2 * std::min(ref.c0, ref.c1)));
    EXPECT_TRUE(row.pass());
  }
  // XOR on two bits: 0110 reads as id 6 and meets its ceiling.
  EXPECT_EQ(r.rows[5].id, 6u);
  EXPECT_EQ(r.rows[5].best_bound_squared, Rational(4));
  EXPECT_EQ(sweep_to_csv(r).substr(0, sweep_to_csv(r).find('\n')), "id,c0,c1,ci,bound_sq_num,bound_sq_den,thm7,thm9,thm10");
}

TEST(Verifier, ComplementDedupeMatchesDirectRows) {
  SweepOptions direct;
  direct.dedupe_complements = false;
  const SweepResult a = sweep_total_functions(2, {});
  const SweepResult b = sweep_total_functions(2, {}, direct);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].c0, b.rows[i].c0);
    EXPECT_EQ(a.rows[i].c1, b.rows[i].c1);
    EXPECT_EQ(a.rows[i].ci, b.rows[i].ci);
    EXPECT_EQ(a.rows[i].pass(), b.rows[i].pass());
  }
  EXPECT_THROW(sweep_total_functions(5, {}), std::invalid_argument);
}

TEST(Verifier, GammaReportMatchesOracle) {
  for (int n = 1; n <= 4; ++n) {
    const GammaReport report = gamma_report(n);
    EXPECT_EQ(report.rows.size(), (std::size_t{1} << (n + 1)) - 2);
    for (const GammaRow& row : report.rows) {
      const FunctionTable f = oracle::boolean(n, [&](const InputWord& w) { return row.profile[oracle::weight(w)] == Value::One; });
      const auto ref = oracle::cert_stats(f);
      const int gamma = oracle_gamma(row.profile);
      EXPECT_EQ(row.gamma, gamma);
      Rational expected(n - gamma, std::min(ref.c0, ref.c1));
      expected.canonicalize();
      EXPECT_EQ(row.ratio, expected);
    }
  }
}

TEST(Verifier, GammaReportExtremes) {
  const GammaReport four = gamma_report(4);
  // f = [weight == 1]: gamma 1, C- = 4.
  bool found = false;
  for (const GammaRow& row : four.rows) {
    if (row.profile == std::vector<Value>{Value::Zero, Value::One, Value::Zero, Value::Zero, Value::Zero}) {
      EXPECT_EQ(row.ratio, Rational(3, 4));
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(four.max_ratio, Rational(3, 2));
  EXPECT_EQ(four.min_ratio, Rational(1, 2));
}

TEST(Verifier, ElementDistinctness) {
  for (int n = 3; n <= 5; ++n) {
    const DistinctnessReport r = element_distinctness_report(n);
    const auto ref = oracle::cert_stats(gen_named(NamedFunction::ElementDistinctness, n, n));
    EXPECT_EQ(r.c1, 2);
    EXPECT_EQ(r.c0, ref.c0);
    EXPECT_EQ(r.c1, ref.c1);
    EXPECT_EQ(r.ceiling_squared, Rational(2 * n));
    EXPECT_NE(r.note.find("sqrt(" + std::to_string(2 * n) + "/1)"), std::string::npos) << r.note;
  }
}

}  // namespace
}  // namespace qadv
