#include "qadv/adversary.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace qadv {
namespace {

Rational random_positive(std::mt19937_64& rng) {
  Rational q(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 4));
  q.canonicalize();
  return q;
}

// Valid random scheme: v = w^2/u times a factor >= 1.
WeightScheme random_scheme(const RelationInstance& rel, std::mt19937_64& rng) {
  std::vector<Rational> w(rel.pair_count()), u(rel.slot_count()), v(rel.slot_count());
  for (std::size_t p = 0; p < rel.pair_count(); ++p) {
    w[p] = random_positive(rng);
    const std::size_t base = rel.slot_offset(p);
    for (std::size_t t = 0; t < rel.diff(p).size(); ++t) {
      u[base + t] = random_positive(rng);
      Rational slack(static_cast<long>(2 + rng() % 2), 2);
      slack.canonicalize();
      v[base + t] = w[p] * w[p] / u[base + t] * slack;
    }
  }
  return WeightScheme(std::move(w), std::move(u), std::move(v));
}

int slot_of(const RelationInstance& rel, std::size_t p, int i) {
  const auto diff = rel.diff(p);
  for (std::size_t t = 0; t < diff.size(); ++t) {
    if (diff[t] == i) return static_cast<int>(rel.slot_offset(p) + t);
  }
  return -1;
}

Rational oracle_alb4(const RelationInstance& rel, const WeightScheme& s) {
  const oracle::Rel r = oracle::from_instance(rel);
  return oracle::alb4(
      r, [&](std::size_t p) { return s.w()[p]; },
      [&](std::size_t p, int i) { return s.u()[slot_of(rel, p, i)]; },
      [&](std::size_t p, int i) { return s.v()[slot_of(rel, p, i)]; });
}

Rational oracle_alb3(const RelationInstance& rel, const WeightScheme& s) {
  const oracle::Rel r = oracle::from_instance(rel);
  bool have_x = false, have_y = false;
  Rational best_x, best_y;
  for (std::size_t x = 0; x < r.xs.size(); ++x) {
    Rational wx = 0;
    for (std::size_t p = 0; p < r.pairs.size(); ++p) {
      if (r.pairs[p].first == x) wx += s.w()[p];
    }
    for (int i = 0; i < r.n; ++i) {
      Rational ux = 0;
      for (std::size_t p = 0; p < r.pairs.size(); ++p) {
        if (r.pairs[p].first == x && slot_of(rel, p, i) >= 0) ux += s.u()[slot_of(rel, p, i)];
      }
      if (ux == 0) continue;
      if (!have_x || wx / ux < best_x) best_x = wx / ux;
      have_x = true;
    }
  }
  for (std::size_t y = 0; y < r.ys.size(); ++y) {
    Rational wy = 0;
    for (std::size_t p = 0; p < r.pairs.size(); ++p) {
      if (r.pairs[p].second == y) wy += s.w()[p];
    }
    for (int i = 0; i < r.n; ++i) {
      Rational vy = 0;
      for (std::size_t p = 0; p < r.pairs.size(); ++p) {
        if (r.pairs[p].second == y && slot_of(rel, p, i) >= 0) vy += s.v()[slot_of(rel, p, i)];
      }
      if (vy == 0) continue;
      if (!have_y || wy / vy < best_y) best_y = wy / vy;
      have_y = true;
    }
  }
  return best_x * best_y;
}

TEST(Adversary, RelationConstructionDropsNothingUsed) {
  const FunctionTable f = oracle::or_n(2);
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}, {0, 2}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  EXPECT_EQ(rel.x_count(), 1u);
  EXPECT_EQ(rel.y_count(), 2u);
  EXPECT_EQ(rel.slot_count(), 2u);
  EXPECT_EQ(rel.x_degree(0), 2u);
  EXPECT_EQ(rel.lx(0, 0), 1u);
  const std::vector<std::pair<InputIndex, InputIndex>> wrong{{1, 0}};
  EXPECT_THROW(RelationInstance::from_table(f, wrong), std::invalid_argument);
  EXPECT_THROW(RelationInstance::from_table(f, {}), std::invalid_argument);
}

TEST(Adversary, CountBoundsMatchOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const RelationInstance rel = RelationInstance::from_table(f, pairs);
    const oracle::Rel r = oracle::from_instance(rel);
    EXPECT_EQ(alb1_bound(rel).value_squared, oracle::alb1(r));
    EXPECT_EQ(alb2_bound(rel).value_squared, oracle::alb2(r));
    // Alb2 never loses to Alb1.
    EXPECT_GE(alb2_bound(rel).value_squared, alb1_bound(rel).value_squared);
  }
}

TEST(Adversary, WeightedBoundsMatchOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const RelationInstance rel = RelationInstance::from_table(f, pairs);
    const WeightScheme s = random_scheme(rel, rng);
    ASSERT_TRUE(validate_scheme(rel, s).ok);
    EXPECT_EQ(alb4_value(rel, s).value_squared, oracle_alb4(rel, s));
    EXPECT_EQ(alb3_value(rel, s).value_squared, oracle_alb3(rel, s));
    EXPECT_LE(alb3_value(rel, s).value_squared, alb4_value(rel, s).value_squared);
  }
}

TEST(Adversary, UniformSchemeOnOr2) {
  const FunctionTable f = oracle::or_n(2);
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}, {0, 2}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  EXPECT_EQ(alb1_bound(rel).value_squared, Rational(2));
  EXPECT_EQ(alb4_value(rel, WeightScheme::uniform(rel)).value_squared, Rational(2));
}

TEST(Adversary, ValidationReportsViolations) {
  const FunctionTable f = oracle::or_n(2);
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}, {0, 2}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  const WeightScheme low({Rational(2), Rational(1)}, {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
  const SchemeValidation v = validate_scheme(rel, low);
  ASSERT_FALSE(v.ok);
  EXPECT_EQ(v.violations[0].kind, SchemeViolation::Kind::ProductBelowWeight);
  EXPECT_EQ(v.violations[0].pair, 0u);
  EXPECT_THROW(alb4_value(rel, low), std::invalid_argument);

  const WeightScheme dead({Rational(0), Rational(1)}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  const SchemeValidation d = validate_scheme(rel, dead);
  ASSERT_FALSE(d.ok);
  EXPECT_EQ(d.violations[0].kind, SchemeViolation::Kind::NonPositiveWy);

  const WeightScheme short_scheme({Rational(1)}, {Rational(1)}, {Rational(1)});
  EXPECT_THROW(validate_scheme(rel, short_scheme), std::invalid_argument);
}

TEST(Adversary, ConversionSchemeIsExact) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const RelationInstance rel = RelationInstance::from_table(f, pairs);
    const WeightScheme s = alb2_to_scheme(rel);
    ASSERT_TRUE(validate_scheme(rel, s).ok);
    EXPECT_EQ(alb3_value(rel, s).value_squared, oracle::alb2(oracle::from_instance(rel)));
  }
}

TEST(Adversary, PruneZeroWeights) {
  const FunctionTable f = oracle::or_n(2);
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}, {0, 2}, {0, 3}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  std::vector<Rational> w{Rational(1), Rational(1), Rational(0)};
  std::vector<Rational> u(rel.slot_count(), Rational(1)), v(rel.slot_count(), Rational(1));
  u[2] = u[3] = v[2] = v[3] = 0;
  const WeightScheme s(w, u, v);
  const auto [reduced, rs] = prune_zero_weights(rel, s);
  EXPECT_EQ(reduced.pair_count(), 2u);
  EXPECT_EQ(reduced.y_count(), 2u);
  // Input 11 loses its only pair, so only the reduced scheme is valid.
  EXPECT_FALSE(validate_scheme(rel, s).ok);
  EXPECT_TRUE(validate_scheme(reduced, rs).ok);
  EXPECT_EQ(alb4_value(reduced, rs).value_squared, Rational(2));
}

TEST(Adversary, JsonRoundTripIsByteExact) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    const RelationInstance rel = RelationInstance::from_table(f, pairs);
    const std::string rel_json = relation_to_json(rel);
    const RelationInstance back = relation_from_json(f, rel_json);
    EXPECT_EQ(relation_to_json(back), rel_json);
    EXPECT_EQ(relation_to_json(relation_from_json(rel_json)), rel_json);

    for (const WeightScheme& s : {random_scheme(rel, rng), alb2_to_scheme(rel)}) {
      const std::string scheme_json = scheme_to_json(rel, s);
      const WeightScheme again = scheme_from_json(back, scheme_json);
      EXPECT_EQ(scheme_to_json(back, again), scheme_json);
      EXPECT_EQ(alb3_value(back, again).value_squared, alb3_value(rel, s).value_squared);
    }
  }
}

TEST(Adversary, SchemeJsonMustCoverDomain) {
  const FunctionTable f = oracle::or_n(2);
  const std::vector<std::pair<InputIndex, InputIndex>> pairs{{0, 1}};
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  EXPECT_THROW(scheme_from_json(rel, R"({"u":[],"v":[],"w":[]})"), std::invalid_argument);
  EXPECT_THROW(relation_from_json(f, R"({"r":[[0,1]],"x":[0,3],"y":[1]})"), std::invalid_argument);
}

}  // namespace
}  // namespace qadv
