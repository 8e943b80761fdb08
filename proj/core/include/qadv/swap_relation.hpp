#pragma once

#include "qadv/graphs.hpp"
#include "qadv/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace qadv {

using GraphKey = std::array<std::uint64_t, 4>;

GraphKey graph_key(const EdgeSet& edges);

/// A relation between edge sets given implicitly by its neighborhoods.
///
/// `representatives` must contain one X-graph per orbit of the symmetry
/// group acting on the construction; `forward` lists the Y-partners of an
/// X-graph and `backward` the X-partners of a Y-graph.
struct SwapFamily {
  std::vector<EdgeSet> representatives;
  std::function<std::vector<EdgeSet>(const EdgeSet&)> forward;
  std::function<std::vector<EdgeSet>(const EdgeSet&)> backward;
};

struct SwapCounts {
  std::int64_t m = 0;
  std::int64_t m_prime = 0;
  std::int64_t l_max = 0;
  std::int64_t max_distance = 0;  // largest edge-Hamming distance of a pair
  std::int64_t min_distance = 0;
  std::vector<std::int64_t> rep_degrees;
  std::vector<EdgeSet> partners;  // union of forward(rep), sorted by key
  std::vector<std::int64_t> partner_degrees;
};

/// m, m' and l_max over the representatives and their partners. Every pair
/// of the relation is isomorphic to some (rep, y) with y in forward(rep), so
/// the counts are exact whenever the symmetry assumption holds. Throws
/// std::logic_error when forward and backward disagree.
SwapCounts count_swap_family(const SwapFamily& family);

/// A scheme with w = 1 and per-slot stored values chosen by whether the
/// differing edge is present in x. Actual u and v are the stored values
/// times sqrt(radicand).
struct EdgeRuleScheme {
  Rational radicand{1};
  std::function<std::pair<Rational, Rational>(bool edge_in_x)> slot;
};

/// Exact squared Alb3 value of the rule scheme over the representatives and
/// their partners. Throws std::invalid_argument when the rule violates
/// u·v >= w^2.
Rational swap_alb3_squared(const SwapFamily& family, const SwapCounts& counts, const EdgeRuleScheme& scheme);

}  // namespace qadv
