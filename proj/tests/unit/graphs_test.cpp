#include "qadv/graphs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qadv {
namespace {

EdgeSet random_edges(const GraphEncoding& enc, std::mt19937_64& rng, int percent) {
  EdgeSet e;
  for (int b = 0; b < enc.positions(); ++b) {
    if (static_cast<int>(rng() % 100) < percent) e.set(b);
  }
  return e;
}

bool has_edge(const GraphEncoding& enc, const EdgeSet& e, int a, int b) {
  if (enc.kind() == GraphEncoding::Kind::General && a > b) std::swap(a, b);
  return e.test(enc.bit(a, b));
}

// Largest matching by trying every injection of left vertices.
int brute_bipartite_matching(const GraphEncoding& enc, const EdgeSet& e) {
  const int n = enc.n_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int size = 0;
    for (int i = 0; i < n; ++i) size += has_edge(enc, e, i, perm[i]);
    best = std::max(best, size);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool brute_general_pm(const GraphEncoding& enc, const EdgeSet& e, std::uint32_t used) {
  const int n = enc.n_vertices();
  int first = 0;
  while (first < n && ((used >> first) & 1)) ++first;
  if (first == n) return true;
  for (int b = first + 1; b < n; ++b) {
    if (!((used >> b) & 1) && has_edge(enc, e, first, b) &&
        brute_general_pm(enc, e, used | (1u << first) | (1u << b))) {
      return true;
    }
  }
  return false;
}

bool brute_two_colorable(const GraphEncoding& enc, const EdgeSet& e) {
  const int n = enc.n_vertices();
  for (std::uint32_t color = 0; color < (1u << n); ++color) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (has_edge(enc, e, a, b) && ((color >> a) & 1) == ((color >> b) & 1)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

TEST(Graphs, GeneralEncodingPositions) {
  const GraphEncoding enc(GraphEncoding::Kind::General, 4);
  EXPECT_EQ(enc.positions(), 6);
  EXPECT_EQ(enc.position(0, 1), 1);
  EXPECT_EQ(enc.position(0, 2), 2);
  EXPECT_EQ(enc.position(1, 2), 3);
  EXPECT_EQ(enc.position(2, 3), 6);
  for (int p = 1; p <= enc.positions(); ++p) {
    const auto [a, b] = enc.edge(p);
    EXPECT_LT(a, b);
    EXPECT_EQ(enc.position(a, b), p);
  }
  EXPECT_THROW(enc.position(1, 1), std::invalid_argument);
  EXPECT_THROW(enc.edge(7), std::invalid_argument);
}

TEST(Graphs, BipartiteEncodingPositions) {
  const GraphEncoding enc(GraphEncoding::Kind::Bipartite, 3);
  EXPECT_EQ(enc.positions(), 9);
  EXPECT_EQ(enc.position(0, 0), 1);
  EXPECT_EQ(enc.position(1, 2), 6);
  EXPECT_EQ(enc.edge(9), std::make_pair(2, 2));
  EdgeSet e;
  e.set(enc.bit(1, 2));
  const InputWord w = enc.to_word(e);
  EXPECT_EQ(std::count(w.begin(), w.end(), 1), 1);
  EXPECT_EQ(w[5], 1);
}

TEST(Graphs, BipartiteMatchingMatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const GraphEncoding enc(GraphEncoding::Kind::Bipartite, n);
    const EdgeSet e = random_edges(enc, rng, 15 + trial % 50);
    const int brute = brute_bipartite_matching(enc, e);
    EXPECT_EQ(max_bipartite_matching(enc, e), brute);
    EXPECT_EQ(has_perfect_matching_bipartite(enc, e), brute == n);
  }
}

TEST(Graphs, GeneralPerfectMatchingMatchesBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const GraphEncoding enc(GraphEncoding::Kind::General, n);
    const EdgeSet e = random_edges(enc, rng, 20 + trial % 40);
    EXPECT_EQ(has_perfect_matching_general(enc, e), n % 2 == 0 && brute_general_pm(enc, e, 0));
    EXPECT_EQ(is_two_colorable(enc, e), brute_two_colorable(enc, e));
  }
}

TEST(Graphs, CycleLengths) {
  const GraphEncoding enc(GraphEncoding::Kind::General, 8);
  EdgeSet two;
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}) two.set(enc.bit(a, b));
  EXPECT_EQ(cycle_lengths(enc, two), (std::vector<int>{3, 5}));
  EXPECT_FALSE(is_two_colorable(enc, two));
  EdgeSet path = two;
  path.reset(enc.bit(3, 7));
  EXPECT_TRUE(cycle_lengths(enc, path).empty());
  EXPECT_EQ(components(adjacency(enc, two)).size(), 2u);
}

}  // namespace
}  // namespace qadv
