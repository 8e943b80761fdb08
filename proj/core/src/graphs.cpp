#include "qadv/graphs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qadv {

GraphEncoding::GraphEncoding(Kind kind, int n_vertices) : kind_(kind), n_(n_vertices) {
  if (n_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  positions_ = kind == Kind::General ? n_vertices * (n_vertices - 1) / 2 : n_vertices * n_vertices;
  if (positions_ > kMaxEdgePositions) throw std::length_error("graph encoding exceeds 256 edge positions");
}

int GraphEncoding::position(int a, int b) const {
  if (kind_ == Kind::Bipartite) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) throw std::invalid_argument("bipartite vertex out of range");
    return a * n_ + b + 1;
  }
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("invalid general edge");
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a + 1;
}

std::pair<int, int> GraphEncoding::edge(int position) const {
  if (position < 1 || position > positions_) throw std::invalid_argument("edge position out of range");
  const int p = position - 1;
  if (kind_ == Kind::Bipartite) return {p / n_, p % n_};
  int b = 1;
  while ((b + 1) * b / 2 <= p) ++b;
  return {p - b * (b - 1) / 2, b};
}

InputWord GraphEncoding::to_word(const EdgeSet& edges) const {
  InputWord word(static_cast<std::size_t>(positions_));
  for (int p = 0; p < positions_; ++p) word[p] = edges[p] ? 1 : 0;
  return word;
}

std::vector<std::vector<int>> adjacency(const GraphEncoding& enc, const EdgeSet& edges) {
  const int n = enc.n_vertices();
  const bool bip = enc.kind() == GraphEncoding::Kind::Bipartite;
  std::vector<std::vector<int>> adj(bip ? 2 * n : n);
  for (int p = 0; p < enc.positions(); ++p) {
    if (!edges[p]) continue;
    auto [a, b] = enc.edge(p + 1);
    if (bip) b += n;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

namespace {

bool augment(int left, const std::vector<std::vector<int>>& adj, int n, std::vector<int>& match_right,
             std::vector<bool>& seen) {
  for (int r : adj[left]) {
    const int j = r - n;
    if (seen[j]) continue;
    seen[j] = true;
    if (match_right[j] < 0 || augment(match_right[j], adj, n, match_right, seen)) {
      match_right[j] = left;
      return true;
    }
  }
  return false;
}

bool perfect_general(const std::vector<std::vector<int>>& adj, std::uint32_t free_mask) {
  if (free_mask == 0) return true;
  const int v = std::countr_zero(free_mask);
  for (int u : adj[v]) {
    if (free_mask & (std::uint32_t{1} << u)) {
      const std::uint32_t rest = free_mask & ~(std::uint32_t{1} << v) & ~(std::uint32_t{1} << u);
      if (perfect_general(adj, rest)) return true;
    }
  }
  return false;
}

}  // namespace

int max_bipartite_matching(const GraphEncoding& enc, const EdgeSet& edges) {
  if (enc.kind() != GraphEncoding::Kind::Bipartite) throw std::invalid_argument("graph is not bipartite-encoded");
  const int n = enc.n_vertices();
  const auto adj = adjacency(enc, edges);
  std::vector<int> match_right(n, -1);
  int size = 0;
  for (int left = 0; left < n; ++left) {
    std::vector<bool> seen(n, false);
    if (augment(left, adj, n, match_right, seen)) ++size;
  }
  return size;
}

bool has_perfect_matching_bipartite(const GraphEncoding& enc, const EdgeSet& edges) {
  return max_bipartite_matching(enc, edges) == enc.n_vertices();
}

bool has_perfect_matching_general(const GraphEncoding& enc, const EdgeSet& edges) {
  if (enc.kind() != GraphEncoding::Kind::General) throw std::invalid_argument("graph is not general-encoded");
  const int n = enc.n_vertices();
  if (n > 24) throw std::length_error("exhaustive matching search is limited to 24 vertices");
  if (n % 2 != 0) return false;
  const auto adj = adjacency(enc, edges);
  return perfect_general(adj, (std::uint32_t{1} << n) - 1);
}

bool is_two_colorable(const GraphEncoding& enc, const EdgeSet& edges) {
  const auto adj = adjacency(enc, edges);
  std::vector<int> color(adj.size(), -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adj) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(adj.size(), false);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
        if (!seen[*it]) {
          seen[*it] = true;
          stack.push_back(*it);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> cycle_lengths(const GraphEncoding& enc, const EdgeSet& edges) {
  const auto adj = adjacency(enc, edges);
  for (const auto& list : adj) {
    if (list.size() != 2) return {};
  }
  std::vector<int> lengths;
  for (const auto& comp : components(adj)) lengths.push_back(static_cast<int>(comp.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace qadv
