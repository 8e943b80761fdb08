#include "qadv/certificates.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace qadv {
namespace {

TEST(Certificates, CheckMatchesDefinition) {
  const FunctionTable f = oracle::or_n(3);
  EXPECT_TRUE(certificate_check(f, InputWord{0, 1, 0}, {2}));
  EXPECT_FALSE(certificate_check(f, InputWord{0, 0, 0}, {1, 2}));
  EXPECT_TRUE(certificate_check(f, InputWord{0, 0, 0}, {1, 2, 3}));
  EXPECT_THROW(certificate_check(f, InputWord{0, 0, 0}, {4}), std::invalid_argument);
}

TEST(Certificates, MinCertificateTieBreak) {
  const FunctionTable f = oracle::or_n(3);
  const MinCertificate c = min_certificate(f, InputWord{0, 1, 1});
  EXPECT_EQ(c.size, 1);
  EXPECT_EQ(c.witness, (PositionSet{2}));
}

TEST(Certificates, ComplexitiesMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const FunctionTable f = oracle::random_boolean(n, rng);
    const auto fast = certificate_complexities(f);
    for (InputIndex x = 0; x < f.size(); ++x) ASSERT_EQ(fast[x], oracle::certificate_size(f, x));
    const auto ref = oracle::cert_stats(f);
    const CertStats stats = cert_stats(f);
    EXPECT_EQ(stats.c0, ref.c0);
    EXPECT_EQ(stats.c1, ref.c1);
    EXPECT_EQ(stats.c, std::max(ref.c0, ref.c1));
    EXPECT_EQ(stats.c_minus, std::min(ref.c0, ref.c1));
  }
}

TEST(Certificates, TernaryAlphabetMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Value> values(27);
    for (auto& v : values) {
      const auto r = rng() % 3;
      v = r == 0 ? Value::Zero : r == 1 ? Value::One : Value::Undefined;
    }
    const FunctionTable f(3, 3, values);
    const auto fast = certificate_complexities(f);
    for (InputIndex x = 0; x < f.size(); ++x) {
      if (f.value(x) == Value::Undefined) {
        EXPECT_EQ(fast[x], -1);
      } else {
        EXPECT_EQ(fast[x], oracle::certificate_size(f, x));
      }
    }
  }
}

TEST(Certificates, NamedFamilies) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(cert_stats(oracle::or_n(n)), (CertStats{n, 1, n, 1}));
    EXPECT_EQ(cert_stats(oracle::and_n(n)), (CertStats{1, n, n, 1}));
    EXPECT_EQ(cert_stats(oracle::parity_n(n)), (CertStats{n, n, n, n}));
  }
  EXPECT_EQ(cert_stats(oracle::majority_n(3)), (CertStats{2, 2, 2, 2}));
  EXPECT_EQ(cert_stats(oracle::majority_n(5)), (CertStats{3, 3, 3, 3}));
}

TEST(Certificates, MinimalCertificatesOfOr) {
  const FunctionTable f = oracle::or_n(3);
  EXPECT_EQ(minimal_certificates(f, InputWord{1, 0, 1}), (std::vector<PositionSet>{{1}, {3}}));
  EXPECT_EQ(minimal_certificates(f, InputWord{0, 0, 0}), (std::vector<PositionSet>{{1, 2, 3}}));
}

TEST(Certificates, CiExactSmallCases) {
  EXPECT_EQ(ci_exact(oracle::or_n(2)).value, 1);
  EXPECT_EQ(ci_exact(oracle::and_n(3)).value, 1);
  EXPECT_EQ(ci_exact(oracle::parity_n(3)).value, 3);
  // 001 and 110 have unique minimal certificates {1,2}.
  const CiResult maj = ci_exact(oracle::majority_n(3));
  EXPECT_EQ(maj.value, 2);
  EXPECT_EQ(ci_upper(oracle::majority_n(3), maj.witness), 2);
}

TEST(Certificates, CiExactNeverExceedsMinAssignment) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const FunctionTable f = oracle::random_boolean(3, rng);
    const CiResult exact = ci_exact(f);
    EXPECT_EQ(ci_upper(f, exact.witness), exact.value);
    const int upper = ci_upper(f, min_certificate_assignment(f));
    EXPECT_LE(exact.value, upper);
    EXPECT_LE(upper, cert_stats(f).c_minus);
  }
}

TEST(Certificates, CiRejectsConstantAndPartial) {
  EXPECT_THROW(ci_exact(FunctionTable::from_symbols(2, 2, "0000")), std::domain_error);
  EXPECT_THROW(ci_exact(FunctionTable::from_symbols(2, 2, "01*1")), std::domain_error);
}

TEST(Certificates, CiUpperRejectsInvalidSets) {
  const FunctionTable f = oracle::or_n(2);
  CertificateAssignment a = min_certificate_assignment(f);
  a[0] = {1};
  EXPECT_THROW(ci_upper(f, a), std::invalid_argument);
  a.erase(0);
  EXPECT_THROW(ci_upper(f, a), std::invalid_argument);
}

TEST(Certificates, AssignmentJsonRoundTrip) {
  const FunctionTable f = oracle::majority_n(3);
  const CertificateAssignment a = min_certificate_assignment(f);
  EXPECT_EQ(assignment_from_json(assignment_to_json(a)), a);
}

TEST(Certificates, GammaOfSymmetricFunctions) {
  EXPECT_EQ(gamma_symmetric(oracle::or_n(3)), 2);
  EXPECT_EQ(gamma_symmetric(oracle::majority_n(5)), 0);
  EXPECT_EQ(gamma_symmetric(oracle::parity_n(4)), 1);
  EXPECT_TRUE(is_symmetric(oracle::majority_n(3)));
  EXPECT_FALSE(is_symmetric(FunctionTable::from_symbols(2, 2, "0100")));
  EXPECT_THROW(gamma_symmetric(FunctionTable::from_symbols(2, 2, "0100")), std::invalid_argument);
}

TEST(Certificates, SymmetricStatsMatchTable) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << (n + 1)); ++mask) {
      const FunctionTable f =
          oracle::boolean(n, [mask](const InputWord& w) { return (mask >> oracle::weight(w)) & 1; });
      EXPECT_EQ(symmetric_cert_stats(weight_profile(f)), cert_stats(f)) << n << " " << mask;
    }
  }
}

}  // namespace
}  // namespace qadv
