#include "qadv/graph_instances.hpp"

#include "qadv/certificates.hpp"
#include "qadv/named_functions.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace qadv {

InstanceMode parse_instance_mode(std::string_view text) {
  if (text == "explicit") return InstanceMode::Explicit;
  if (text == "counting") return InstanceMode::Counting;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

std::string to_string(InstanceMode mode) { return mode == InstanceMode::Explicit ? "explicit" : "counting"; }

MatchingVariant parse_matching_variant(std::string_view text) {
  if (text == "two-paths") return MatchingVariant::TwoPaths;
  if (text == "one-component") return MatchingVariant::OneComponent;
  throw std::invalid_argument("unknown matching variant: " + std::string(text));
}

std::string to_string(MatchingVariant v) { return v == MatchingVariant::TwoPaths ? "two-paths" : "one-component"; }

namespace {

// Lengths (or index gaps) allowed by the constructions: n/3 <= len <= 2n/3.
bool in_middle_third(int len, int n) { return 3 * len >= n && 3 * len <= 2 * n; }

int third_low(int n) { return (n + 2) / 3; }
int third_high(int n) { return 2 * n / 3; }

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

int distance(const EdgeSet& a, const EdgeSet& b) { return static_cast<int>((a ^ b).count()); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction property violated: " + what);
}

bool contains(const std::vector<EdgeSet>& list, const EdgeSet& g) {
  return std::find(list.begin(), list.end(), g) != list.end();
}

BoundReport alb2_from_counts(std::int64_t m, std::int64_t m_prime, std::int64_t l_max) {
  Rational value(m * m_prime, l_max);
  value.canonicalize();
  BoundReport r = make_report(BoundMethod::Alb2, value);
  r.witnesses = {{"m", m}, {"m_prime", m_prime}, {"l_max", l_max}};
  return r;
}

// ---------------------------------------------------------------------------
// Cycle constructions.

std::vector<int> cycle_order(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == start) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

EdgeSet cycle_graph(const GraphEncoding& enc, std::span<const int> order) {
  EdgeSet g;
  const auto len = order.size();
  for (std::size_t t = 0; t < len; ++t) g.set(enc.bit(order[t], order[(t + 1) % len]));
  return g;
}

bool is_single_cycle(const GraphEncoding& enc, const EdgeSet& g) {
  const auto lengths = cycle_lengths(enc, g);
  return lengths.size() == 1 && lengths[0] == enc.n_vertices();
}

bool is_two_odd_cycles(const GraphEncoding& enc, const EdgeSet& g) {
  const auto lengths = cycle_lengths(enc, g);
  const int n = enc.n_vertices();
  return lengths.size() == 2 && lengths[0] % 2 == 1 && lengths[1] % 2 == 1 && in_middle_third(lengths[0], n) &&
         in_middle_third(lengths[1], n);
}

EdgeSet relabel(const GraphEncoding& enc, const EdgeSet& g, const std::vector<int>& perm) {
  EdgeSet out;
  for (int p = 0; p < enc.positions(); ++p) {
    if (!g[p]) continue;
    const auto [a, b] = enc.edge(p + 1);
    out.set(enc.bit(perm[a], perm[b]));
  }
  return out;
}

}  // namespace

std::vector<EdgeSet> cycle_forward(const GraphEncoding& enc, const EdgeSet& x) {
  if (!is_single_cycle(enc, x)) throw std::invalid_argument("graph is not a Hamiltonian cycle");
  const int n = enc.n_vertices();
  const auto order = cycle_order(adjacency(enc, x), 0);
  std::vector<EdgeSet> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      const int d = b - a;
      if (d % 2 == 0 || (n - d) % 2 == 0 || !in_middle_third(d, n) || !in_middle_third(n - d, n)) continue;
      EdgeSet y = x;
      y.reset(enc.bit(order[a], order[a + 1]));
      y.reset(enc.bit(order[b], order[(b + 1) % n]));
      // Close order[a+1..b] and order[b+1..a] into separate cycles.
      y.set(enc.bit(order[a + 1], order[b]));
      y.set(enc.bit(order[a], order[(b + 1) % n]));
      out.push_back(y);
    }
  }
  return out;
}

std::vector<EdgeSet> cycle_backward(const GraphEncoding& enc, const EdgeSet& y) {
  if (!is_two_odd_cycles(enc, y)) throw std::invalid_argument("graph is not two odd cycles of middle length");
  const auto adj = adjacency(enc, y);
  const auto comps = components(adj);
  const auto c1 = cycle_order(adj, comps[0][0]);
  const auto c2 = cycle_order(adj, comps[1][0]);
  std::vector<EdgeSet> out;
  for (std::size_t s = 0; s < c1.size(); ++s) {
    const int p = c1[s], q = c1[(s + 1) % c1.size()];
    for (std::size_t t = 0; t < c2.size(); ++t) {
      const int r = c2[t], u = c2[(t + 1) % c2.size()];
      EdgeSet base = y;
      base.reset(enc.bit(p, q));
      base.reset(enc.bit(r, u));
      EdgeSet x1 = base, x2 = base;
      x1.set(enc.bit(p, r));
      x1.set(enc.bit(q, u));
      x2.set(enc.bit(p, u));
      x2.set(enc.bit(q, r));
      out.push_back(x1);
      out.push_back(x2);
    }
  }
  return out;
}

namespace {

CountedInstance build_cycle_instance(int n, InstanceMode mode, std::uint64_t seed, int samples, bool matching) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("cycle constructions need even n >= 6");
  if (mode == InstanceMode::Explicit && n > 8) throw std::length_error("explicit mode is limited to n <= 8");
  if (n > 22) throw std::length_error("cycle constructions are limited to n <= 22");
  if (samples < 0) throw std::invalid_argument("samples must be non-negative");
  const GraphEncoding enc(GraphEncoding::Kind::General, n);

  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  const EdgeSet rep = cycle_graph(enc, identity);
  const SwapFamily family{{rep},
                          [&](const EdgeSet& x) { return cycle_forward(enc, x); },
                          [&](const EdgeSet& y) { return cycle_backward(enc, y); }};

  // Side checks: cycles are bipartite and have a perfect matching; two odd
  // cycles are neither.
  const auto check_cycle_side = [&](const EdgeSet& g) {
    require(is_single_cycle(enc, g), "X-graph is a single n-cycle");
    require(is_two_colorable(enc, g), "X-graph is bipartite");
    if (matching) require(has_perfect_matching_general(enc, g), "single even cycle has a perfect matching");
  };
  const auto check_split_side = [&](const EdgeSet& g) {
    require(is_two_odd_cycles(enc, g), "Y-graph is two odd cycles");
    require(!is_two_colorable(enc, g), "Y-graph contains an odd cycle");
    if (matching) require(!has_perfect_matching_general(enc, g), "odd cycles have no perfect matching");
  };

  CountedInstance out;
  out.name = matching ? "graph-matching" : "bipartiteness";
  out.n = n;
  out.mode = mode;

  const SwapCounts counts = count_swap_family(family);
  check_cycle_side(rep);
  for (const auto& y : counts.partners) check_split_side(y);
  require(counts.min_distance == 4 && counts.max_distance == 4, "pairs differ in exactly 4 edge positions");

  // Spot checks on random relabelings.
  std::mt19937_64 rng(seed);
  const std::set<std::int64_t> partner_degrees(counts.partner_degrees.begin(), counts.partner_degrees.end());
  for (int s = 0; s < samples; ++s) {
    const EdgeSet x = relabel(enc, rep, random_permutation(rng, n));
    check_cycle_side(x);
    const auto fwd = cycle_forward(enc, x);
    require(static_cast<std::int64_t>(fwd.size()) == counts.rep_degrees[0], "X-degree is uniform");
    const EdgeSet y = fwd[draw(rng, fwd.size())];
    check_split_side(y);
    require(distance(x, y) == 4, "sampled pair differs in 4 edge positions");
    const auto back = cycle_backward(enc, y);
    require(partner_degrees.count(static_cast<std::int64_t>(back.size())) == 1, "Y-degree matches a representative");
    require(contains(back, x), "sampled pair is symmetric");
  }
  out.stats["samples"] = samples;
  out.stats["partners_checked"] = static_cast<std::int64_t>(counts.partners.size());

  std::int64_t m = counts.m, m_prime = counts.m_prime;
  if (mode == InstanceMode::Explicit) {
    // Every Hamiltonian cycle: vertex 0 first, second vertex below the last.
    std::vector<EdgeSet> xs;
    std::vector<int> order(identity);
    do {
      if (order[1] < order[n - 1]) xs.push_back(cycle_graph(enc, order));
    } while (std::next_permutation(order.begin() + 1, order.end()));

    std::map<GraphKey, std::uint32_t> y_index;
    std::vector<EdgeSet> ys;
    std::vector<RelationInstance::Pair> pairs;
    for (std::uint32_t xi = 0; xi < xs.size(); ++xi) {
      check_cycle_side(xs[xi]);
      for (const auto& y : cycle_forward(enc, xs[xi])) {
        require(distance(xs[xi], y) == 4, "pair differs in 4 edge positions");
        const auto [it, fresh] = y_index.emplace(graph_key(y), static_cast<std::uint32_t>(ys.size()));
        if (fresh) {
          check_split_side(y);
          ys.push_back(y);
        }
        pairs.push_back({xi, it->second});
      }
    }
    out.stats["x_count"] = static_cast<std::int64_t>(xs.size());
    out.stats["y_count"] = static_cast<std::int64_t>(ys.size());
    out.stats["pairs"] = static_cast<std::int64_t>(pairs.size());

    std::vector<InputWord> cycle_words, split_words;
    for (const auto& g : xs) cycle_words.push_back(enc.to_word(g));
    for (const auto& g : ys) split_words.push_back(enc.to_word(g));
    if (matching) {
      for (auto& p : pairs) std::swap(p.x, p.y);
      out.relation = RelationInstance::from_words(enc.positions(), 2, std::move(split_words), std::move(cycle_words),
                                                  std::move(pairs));
    } else {
      out.relation = RelationInstance::from_words(enc.positions(), 2, std::move(cycle_words), std::move(split_words),
                                                  std::move(pairs));
    }
    out.relation_is_full = true;
    const BoundReport explicit_bound = alb2_bound(*out.relation);
    // Cross-validate the representative counts against the full relation.
    const std::int64_t em = matching ? explicit_bound.witnesses.at("m_prime") : explicit_bound.witnesses.at("m");
    const std::int64_t em_prime = matching ? explicit_bound.witnesses.at("m") : explicit_bound.witnesses.at("m_prime");
    require(em == counts.m && em_prime == counts.m_prime && explicit_bound.witnesses.at("l_max") == counts.l_max,
            "explicit and counting modes agree on m, m', l_max");
  }
  if (matching) std::swap(m, m_prime);
  out.m = m;
  out.m_prime = m_prime;
  out.l_max = counts.l_max;
  out.bound = alb2_from_counts(out.m, out.m_prime, out.l_max);
  return out;
}

}  // namespace

CountedInstance gen_bipartiteness(int n, InstanceMode mode, std::uint64_t seed, int samples) {
  return build_cycle_instance(n, mode, seed, samples, false);
}

CountedInstance gen_graph_matching(int n, InstanceMode mode, std::uint64_t seed, int samples) {
  return build_cycle_instance(n, mode, seed, samples, true);
}

// ---------------------------------------------------------------------------
// Bipartite matching.

EdgeSet build_matching_x(const GraphEncoding& enc, const MatchingLabel& label, MatchingVariant variant) {
  const int n = enc.n_vertices();
  if (static_cast<int>(label.tau.size()) != n || static_cast<int>(label.sigma.size()) != n) {
    throw std::invalid_argument("labeling size does not match n");
  }
  if (label.k < third_low(n) || label.k > third_high(n)) throw std::invalid_argument("split k out of range");
  EdgeSet g;
  for (int i = 1; i <= n; ++i) {
    if (i != label.k) g.set(enc.bit(label.tau[i - 1], label.sigma[i - 1]));
    if (i < n) g.set(enc.bit(label.tau[i], label.sigma[i - 1]));
  }
  if (variant == MatchingVariant::OneComponent) g.set(enc.bit(label.tau[label.k], label.sigma[n - 1]));
  return g;
}

namespace {

std::vector<int> walk_path(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<int> seq{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int v : adj[cur]) {
      if (v != prev) next = v;
    }
    if (next < 0) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  return seq;
}

std::int64_t edge_count(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp) {
  std::int64_t deg = 0;
  for (int v : comp) deg += static_cast<std::int64_t>(adj[v].size());
  return deg / 2;
}

}  // namespace

std::vector<MatchingLabel> matching_labelings(const GraphEncoding& enc, const EdgeSet& x, MatchingVariant variant) {
  if (enc.kind() != GraphEncoding::Kind::Bipartite) throw std::invalid_argument("graph is not bipartite-encoded");
  const int n = enc.n_vertices();
  const auto adj = adjacency(enc, x);
  for (const auto& list : adj) {
    if (list.empty() || list.size() > 3) return {};
  }
  const auto comps = components(adj);
  if (comps.size() != 2) return {};

  const auto is_left = [n](int v) { return v < n; };
  const auto is_path = [&](const std::vector<int>& comp) {
    return edge_count(adj, comp) + 1 == static_cast<std::int64_t>(comp.size()) &&
           std::all_of(comp.begin(), comp.end(), [&](int v) { return adj[v].size() <= 2; });
  };
  const auto endpoints = [&](const std::vector<int>& comp) {
    std::vector<int> ends;
    for (int v : comp) {
      if (adj[v].size() == 1) ends.push_back(v);
    }
    std::sort(ends.begin(), ends.end());
    return ends;
  };

  // First path: both endpoints on the left.
  int first = -1;
  for (int c = 0; c < 2; ++c) {
    const auto ends = endpoints(comps[c]);
    if (is_path(comps[c]) && ends.size() == 2 && is_left(ends[0]) && is_left(ends[1])) first = c;
  }
  if (first < 0) return {};
  const auto& p1 = comps[first];
  const auto& rest = comps[1 - first];
  const int k = (static_cast<int>(p1.size()) + 1) / 2;
  if (k < third_low(n) || k > third_high(n)) return {};
  if (static_cast<int>(rest.size()) != 2 * (n - k) + 1) return {};

  std::vector<std::vector<int>> first_orders;
  for (int end : endpoints(p1)) first_orders.push_back(walk_path(adj, end));

  // Second component as (sigma_k, tau_{k+1}, sigma_{k+1}, ..., tau_n, sigma_n).
  std::vector<std::vector<int>> second_orders;
  if (variant == MatchingVariant::TwoPaths) {
    const auto ends = endpoints(rest);
    if (!is_path(rest) || ends.size() != 2 || is_left(ends[0]) || is_left(ends[1])) return {};
    for (int end : ends) second_orders.push_back(walk_path(adj, end));
  } else {
    if (edge_count(adj, rest) != static_cast<std::int64_t>(rest.size())) return {};
    const auto ends = endpoints(rest);
    if (ends.size() != 1 || is_left(ends[0])) return {};
    const int pendant = ends[0];
    const int hub = adj[pendant][0];
    if (adj[hub].size() != 3) return {};
    for (int first_step : adj[hub]) {
      if (first_step == pendant) continue;
      std::vector<int> seq{pendant, hub};
      int prev = hub, cur = first_step;
      while (cur != hub) {
        if (adj[cur].size() != 2) return {};
        seq.push_back(cur);
        const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
      }
      second_orders.push_back(std::move(seq));
    }
  }

  std::vector<MatchingLabel> out;
  for (const auto& a : first_orders) {
    for (const auto& b : second_orders) {
      if (static_cast<int>(b.size()) != 2 * (n - k) + 1) continue;
      MatchingLabel label{std::vector<int>(n, -1), std::vector<int>(n, -1), k};
      for (int t = 0; t < k; ++t) label.tau[t] = a[2 * t];
      for (int t = 0; t + 1 < k; ++t) label.sigma[t] = a[2 * t + 1] - n;
      for (int s = 0; s <= n - k; ++s) label.sigma[k - 1 + s] = b[2 * s] - n;
      for (int s = 0; s < n - k; ++s) label.tau[k + s] = b[2 * s + 1];
      const bool filled = std::none_of(label.tau.begin(), label.tau.end(), [](int v) { return v < 0; }) &&
                          std::none_of(label.sigma.begin(), label.sigma.end(), [](int v) { return v < 0; });
      if (filled && build_matching_x(enc, label, variant) == x) out.push_back(std::move(label));
    }
  }
  return out;
}

std::vector<EdgeSet> matching_forward(const GraphEncoding& enc, const EdgeSet& x, MatchingVariant variant) {
  const int n = enc.n_vertices();
  const auto labels = matching_labelings(enc, x, variant);
  if (labels.empty()) throw std::invalid_argument("graph is not an X-graph of the matching construction");
  std::vector<EdgeSet> out;
  for (const auto& L : labels) {
    for (int i = 1; i < L.k; ++i) {
      for (int j = L.k + 1; j <= n; ++j) {
        if (!in_middle_third(j - i, n)) continue;
        EdgeSet y = x;
        y.reset(enc.bit(L.tau[i - 1], L.sigma[i - 1]));
        y.reset(enc.bit(L.tau[j - 1], L.sigma[j - 1]));
        y.set(enc.bit(L.tau[i - 1], L.sigma[j - 1]));
        y.set(enc.bit(L.tau[j - 1], L.sigma[i - 1]));
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return graph_key(a) < graph_key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeSet> matching_backward(const GraphEncoding& enc, const EdgeSet& y, MatchingVariant variant) {
  const int n = enc.n_vertices();
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < enc.positions(); ++p) {
    if (y[p]) edges.push_back(enc.edge(p + 1));
  }
  std::vector<EdgeSet> out;
  for (std::size_t e1 = 0; e1 < edges.size(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < edges.size(); ++e2) {
      const auto [a, b] = edges[e1];
      const auto [c, d] = edges[e2];
      if (a == c || b == d || y[enc.bit(a, d)] || y[enc.bit(c, b)]) continue;
      EdgeSet x = y;
      x.reset(enc.bit(a, b));
      x.reset(enc.bit(c, d));
      x.set(enc.bit(a, d));
      x.set(enc.bit(c, b));
      for (const auto& L : matching_labelings(enc, x, variant)) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) pos[L.tau[t]] = t + 1;
        const int i = pos[a], j = pos[c];
        const bool horizontal =
            L.sigma[i - 1] == d && L.sigma[j - 1] == b && i != L.k && j != L.k;
        if (horizontal && std::min(i, j) < L.k && L.k < std::max(i, j) && in_middle_third(std::abs(j - i), n)) {
          out.push_back(x);
          break;
        }
      }
    }
  }
  return out;
}

CountedInstance gen_bipartite_matching(int n, InstanceMode mode, MatchingVariant variant, std::uint64_t seed,
                                       int samples) {
  if (n < 6) throw std::invalid_argument("bipartite matching needs n >= 6");
  if (n > 16) throw std::length_error("bipartite matching is limited to n <= 16");
  if (mode == InstanceMode::Explicit && n > 12) throw std::length_error("explicit mode is limited to n <= 12");
  if (samples < 0) throw std::invalid_argument("samples must be non-negative");
  const GraphEncoding enc(GraphEncoding::Kind::Bipartite, n);

  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<EdgeSet> reps;
  for (int k = third_low(n); k <= third_high(n); ++k) reps.push_back(build_matching_x(enc, {identity, identity, k}, variant));

  const SwapFamily family{reps,
                          [&](const EdgeSet& x) { return matching_forward(enc, x, variant); },
                          [&](const EdgeSet& y) { return matching_backward(enc, y, variant); }};
  const SwapCounts counts = count_swap_family(family);

  for (const auto& x : reps) require(!has_perfect_matching_bipartite(enc, x), "X-graph has no perfect matching");
  for (const auto& y : counts.partners) require(has_perfect_matching_bipartite(enc, y), "Y-graph has a perfect matching");
  require(counts.min_distance == 4 && counts.max_distance == 4, "pairs differ in exactly 4 edge positions");

  std::mt19937_64 rng(seed);
  const std::set<std::int64_t> partner_degrees(counts.partner_degrees.begin(), counts.partner_degrees.end());
  const int k_span = third_high(n) - third_low(n) + 1;
  for (int s = 0; s < samples; ++s) {
    MatchingLabel label{random_permutation(rng, n), random_permutation(rng, n),
                        third_low(n) + static_cast<int>(draw(rng, static_cast<std::uint64_t>(k_span)))};
    const EdgeSet x = build_matching_x(enc, label, variant);
    require(!has_perfect_matching_bipartite(enc, x), "sampled X-graph has no perfect matching");
    const auto fwd = matching_forward(enc, x, variant);
    require(static_cast<std::int64_t>(fwd.size()) == counts.rep_degrees[label.k - third_low(n)],
            "X-degree matches the representative with the same k");
    const EdgeSet y = fwd[draw(rng, fwd.size())];
    require(has_perfect_matching_bipartite(enc, y), "sampled Y-graph has a perfect matching");
    require(distance(x, y) == 4, "sampled pair differs in 4 edge positions");
    const auto back = matching_backward(enc, y, variant);
    require(partner_degrees.count(static_cast<std::int64_t>(back.size())) == 1, "Y-degree matches a representative");
    require(contains(back, x), "sampled pair is symmetric");
  }

  CountedInstance out;
  out.name = "bipartite-matching";
  out.n = n;
  out.mode = mode;
  out.m = counts.m;
  out.m_prime = counts.m_prime;
  out.l_max = counts.l_max;
  out.bound = alb2_from_counts(out.m, out.m_prime, out.l_max);
  out.stats["representatives"] = static_cast<std::int64_t>(reps.size());
  out.stats["partners_checked"] = static_cast<std::int64_t>(counts.partners.size());
  out.stats["samples"] = samples;
  out.stats["one_component"] = variant == MatchingVariant::OneComponent ? 1 : 0;

  // Removed (horizontal) edges: u = 1/sqrt(n), v = sqrt(n); added edges the
  // reverse. Stored values carry the common factor sqrt(n).
  const Rational inv_n(1, n);
  const EdgeRuleScheme scheme{Rational(n), [inv_n](bool in_x) {
                                return in_x ? std::pair{inv_n, Rational(1)} : std::pair{Rational(1), inv_n};
                              }};
  out.scheme_alb3_squared = swap_alb3_squared(family, counts, scheme);

  if (mode == InstanceMode::Explicit) {
    std::map<GraphKey, std::uint32_t> x_index, y_index;
    std::vector<InputWord> x_words, y_words;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    const auto intern = [&](std::map<GraphKey, std::uint32_t>& index, std::vector<InputWord>& words,
                            const EdgeSet& g) {
      const auto [it, fresh] = index.emplace(graph_key(g), static_cast<std::uint32_t>(words.size()));
      if (fresh) words.push_back(enc.to_word(g));
      return it->second;
    };
    for (const auto& x : reps) {
      const auto xi = intern(x_index, x_words, x);
      for (const auto& y : matching_forward(enc, x, variant)) pairs.emplace(xi, intern(y_index, y_words, y));
    }
    for (const auto& y : counts.partners) {
      const auto yi = intern(y_index, y_words, y);
      for (const auto& x : matching_backward(enc, y, variant)) pairs.emplace(intern(x_index, x_words, x), yi);
    }
    std::vector<RelationInstance::Pair> list;
    for (const auto& [x, y] : pairs) list.push_back({x, y});
    out.stats["neighborhood_pairs"] = static_cast<std::int64_t>(list.size());
    out.relation = RelationInstance::from_words(enc.positions(), 2, std::move(x_words), std::move(y_words),
                                                std::move(list));
    out.relation_is_full = false;
  }
  return out;
}

CountedInstance gen_invert_permutation_relation(int n) {
  if (n < 4 || n > 8 || n % 2 != 0) throw std::invalid_argument("invert-permutation relation needs even n in [4,8]");
  const FunctionTable f = gen_named(NamedFunction::InvertPermutation, n, n);
  std::vector<Symbol> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Symbol{0});
  std::vector<std::pair<InputIndex, InputIndex>> pairs;
  do {
    const InputIndex x = encode(perm, n);
    if (f.value(x) != Value::Zero) continue;
    const auto p = std::find(perm.begin(), perm.end(), Symbol{0}) - perm.begin();
    for (int q = 0; q < n; ++q) {
      if ((q - p) % 2 == 0) continue;
      auto partner = perm;
      std::swap(partner[p], partner[q]);
      pairs.emplace_back(x, encode(partner, n));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  CountedInstance out;
  out.name = "invert-permutation";
  out.n = n;
  out.mode = InstanceMode::Explicit;
  out.relation = RelationInstance::from_table(f, pairs);
  out.relation_is_full = true;
  out.bound = alb2_bound(*out.relation);
  out.m = out.bound.witnesses.at("m");
  out.m_prime = out.bound.witnesses.at("m_prime");
  out.l_max = out.bound.witnesses.at("l_max");
  const CertStats stats = cert_stats(f);
  out.stats["c0"] = stats.c0;
  out.stats["c1"] = stats.c1;
  out.stats["pairs"] = static_cast<std::int64_t>(pairs.size());
  return out;
}

std::string instance_to_json(const CountedInstance& inst) {
  nlohmann::json doc;
  doc["name"] = inst.name;
  doc["n"] = inst.n;
  doc["mode"] = to_string(inst.mode);
  doc["m"] = inst.m;
  doc["m_prime"] = inst.m_prime;
  doc["l_max"] = inst.l_max;
  doc["alb2_sq"] = to_string(inst.bound.value_squared);
  doc["alb2_value"] = inst.bound.value;
  doc["relation_is_full"] = inst.relation_is_full;
  if (inst.relation) doc["relation_pairs"] = inst.relation->pair_count();
  if (inst.scheme_alb3_squared) {
    doc["scheme_alb3_sq"] = to_string(*inst.scheme_alb3_squared);
    doc["scheme_alb3_value"] = std::sqrt(to_double(*inst.scheme_alb3_squared));
  }
  doc["stats"] = inst.stats;
  return doc.dump();
}

}  // namespace qadv
