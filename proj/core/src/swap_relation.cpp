#include "qadv/swap_relation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace qadv {

GraphKey graph_key(const EdgeSet& edges) {
  GraphKey key{};
  for (int p = 0; p < kMaxEdgePositions; ++p) {
    if (edges[p]) key[p / 64] |= std::uint64_t{1} << (p % 64);
  }
  return key;
}

namespace {

struct Neighborhood {
  std::vector<EdgeSet> graphs;
  std::vector<GraphKey> keys;  // sorted, parallel to graphs
};

Neighborhood normalize(std::vector<EdgeSet> graphs) {
  std::vector<std::pair<GraphKey, std::size_t>> order;
  order.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) order.emplace_back(graph_key(graphs[i]), i);
  std::sort(order.begin(), order.end());
  Neighborhood out;
  for (const auto& [key, i] : order) {
    if (!out.keys.empty() && out.keys.back() == key) continue;
    out.keys.push_back(key);
    out.graphs.push_back(graphs[i]);
  }
  return out;
}

std::vector<int> diff_positions(const EdgeSet& a, const EdgeSet& b) {
  const EdgeSet d = a ^ b;
  std::vector<int> out;
  for (int p = 0; p < kMaxEdgePositions; ++p) {
    if (d[p]) out.push_back(p);
  }
  return out;
}

std::vector<std::int64_t> partner_counts(const EdgeSet& center, const std::vector<EdgeSet>& partners) {
  std::vector<std::int64_t> counts(kMaxEdgePositions, 0);
  for (const auto& other : partners) {
    for (int p : diff_positions(center, other)) ++counts[p];
  }
  return counts;
}

}  // namespace

SwapCounts count_swap_family(const SwapFamily& family) {
  if (family.representatives.empty()) throw std::invalid_argument("swap family has no representatives");
  SwapCounts out;
  std::vector<Neighborhood> forward;
  std::vector<EdgeSet> all_partners;
  for (const auto& rep : family.representatives) {
    Neighborhood nb = normalize(family.forward(rep));
    if (nb.graphs.empty()) throw std::logic_error("representative has no partners");
    out.rep_degrees.push_back(static_cast<std::int64_t>(nb.graphs.size()));
    all_partners.insert(all_partners.end(), nb.graphs.begin(), nb.graphs.end());
    forward.push_back(std::move(nb));
  }
  Neighborhood partners = normalize(std::move(all_partners));
  out.partners = partners.graphs;

  std::vector<Neighborhood> backward;
  std::vector<std::vector<std::int64_t>> ly;
  for (const auto& y : partners.graphs) {
    Neighborhood nb = normalize(family.backward(y));
    out.partner_degrees.push_back(static_cast<std::int64_t>(nb.graphs.size()));
    ly.push_back(partner_counts(y, nb.graphs));
    backward.push_back(std::move(nb));
  }

  out.min_distance = std::numeric_limits<std::int64_t>::max();
  for (std::size_t r = 0; r < family.representatives.size(); ++r) {
    const EdgeSet& x = family.representatives[r];
    const GraphKey x_key = graph_key(x);
    const auto lx = partner_counts(x, forward[r].graphs);
    for (std::size_t t = 0; t < forward[r].graphs.size(); ++t) {
      const auto it = std::lower_bound(partners.keys.begin(), partners.keys.end(), forward[r].keys[t]);
      const auto y = static_cast<std::size_t>(it - partners.keys.begin());
      if (!std::binary_search(backward[y].keys.begin(), backward[y].keys.end(), x_key)) {
        throw std::logic_error("forward and backward neighborhoods disagree");
      }
      const auto diff = diff_positions(x, forward[r].graphs[t]);
      if (diff.empty()) throw std::logic_error("related graphs are identical");
      out.max_distance = std::max<std::int64_t>(out.max_distance, static_cast<std::int64_t>(diff.size()));
      out.min_distance = std::min<std::int64_t>(out.min_distance, static_cast<std::int64_t>(diff.size()));
      for (int p : diff) out.l_max = std::max(out.l_max, lx[p] * ly[y][p]);
    }
  }
  out.m = *std::min_element(out.rep_degrees.begin(), out.rep_degrees.end());
  out.m_prime = *std::min_element(out.partner_degrees.begin(), out.partner_degrees.end());
  return out;
}

Rational swap_alb3_squared(const SwapFamily& family, const SwapCounts& counts, const EdgeRuleScheme& scheme) {
  if (scheme.radicand <= 0) throw std::invalid_argument("radicand must be positive");
  for (bool in_x : {false, true}) {
    const auto [u, v] = scheme.slot(in_x);
    if (u < 0 || v < 0 || u * v * scheme.radicand < 1) {
      throw std::invalid_argument("rule scheme violates u*v >= w^2");
    }
  }
  // min over centers and positions of w_center / aggregate(center, position).
  const auto side_min = [&](const EdgeSet& center, const std::vector<EdgeSet>& partners, bool center_is_x) {
    std::map<int, Rational> aggregate;
    for (const auto& other : partners) {
      for (int p : diff_positions(center, other)) {
        const bool in_x = center_is_x ? center[p] : other[p];
        const auto [u, v] = scheme.slot(in_x);
        aggregate[p] += center_is_x ? u : v;
      }
    }
    std::optional<Rational> best;
    const Rational w(static_cast<long>(partners.size()));
    for (const auto& [p, total] : aggregate) {
      if (total == 0) continue;
      const Rational ratio = w / total;
      if (!best || ratio < *best) best = ratio;
    }
    if (!best) throw std::logic_error("rule scheme has no positive aggregate");
    return *best;
  };

  std::optional<Rational> x_min, y_min;
  for (const auto& rep : family.representatives) {
    const Rational r = side_min(rep, normalize(family.forward(rep)).graphs, true);
    if (!x_min || r < *x_min) x_min = r;
  }
  for (const auto& y : counts.partners) {
    const Rational r = side_min(y, normalize(family.backward(y)).graphs, false);
    if (!y_min || r < *y_min) y_min = r;
  }
  Rational result = *x_min * *y_min / scheme.radicand;
  result.canonicalize();
  return result;
}

}  // namespace qadv
