#pragma once

#include "qadv/adversary.hpp"
#include "qadv/graphs.hpp"
#include "qadv/swap_relation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qadv {

enum class InstanceMode { Explicit, Counting };

InstanceMode parse_instance_mode(std::string_view text);
std::string to_string(InstanceMode mode);

/// Parameters of a relation construction.
///
/// When `relation_is_full` is set, m, m' and l_max equal what alb2_bound
/// computes on `relation`. Otherwise they were counted on representatives
/// and `relation`, if present, is only the neighborhood of those
/// representatives.
struct CountedInstance {
  std::string name;
  int n = 0;
  InstanceMode mode = InstanceMode::Counting;
  std::int64_t m = 0;
  std::int64_t m_prime = 0;
  std::int64_t l_max = 0;
  BoundReport bound;  // Alb2 from (m, m', l_max)
  std::optional<RelationInstance> relation;
  bool relation_is_full = false;
  std::optional<Rational> scheme_alb3_squared;  // hand-built Alb3 scheme, when the construction has one
  std::map<std::string, std::int64_t> stats;    // sizes and number of items each check covered
};

std::string instance_to_json(const CountedInstance& inst);

inline constexpr int kDefaultSamples = 1000;

// Cycle constructions on general graphs with n vertices (n even).
// X: Hamiltonian cycles. Y: two disjoint cycles of odd lengths in
// [n/3, 2n/3]. Pairs differ by replacing two cycle edges (v1,v2), (v3,v4)
// with (v1,v3), (v2,v4).

std::vector<EdgeSet> cycle_forward(const GraphEncoding& enc, const EdgeSet& x);
std::vector<EdgeSet> cycle_backward(const GraphEncoding& enc, const EdgeSet& y);

/// Explicit mode enumerates every graph (n <= 8). Counting mode uses the
/// single cycle 0-1-...-(n-1) as representative and spot-checks random
/// relabelings. Property violations throw std::logic_error.
CountedInstance gen_bipartiteness(int n, InstanceMode mode, std::uint64_t seed = 0, int samples = kDefaultSamples);

/// The bipartiteness relation with 0- and 1-sides exchanged; both sides are
/// re-certified with the perfect-matching checker.
CountedInstance gen_graph_matching(int n, InstanceMode mode, std::uint64_t seed = 0, int samples = kDefaultSamples);

// Bipartite matching on n left and n right vertices.
//
// A labeling is two permutations tau, sigma (0-based vertex ids, entry t is
// the vertex labelled t+1) and a split k in [ceil(n/3), floor(2n/3)]. The
// X-graph has the horizontal edges (tau_i, sigma_i) for i != k and the links
// (tau_{i+1}, sigma_i) for i < n: two paths with an odd number of vertices
// each. The OneComponent variant adds (tau_{k+1}, sigma_n), turning the
// second path into an even cycle with a pendant vertex. The swap picks
// i < k < j with j - i in the same range, removes (tau_i, sigma_i) and
// (tau_j, sigma_j) and adds (tau_i, sigma_j) and (tau_j, sigma_i).

enum class MatchingVariant { TwoPaths, OneComponent };

MatchingVariant parse_matching_variant(std::string_view text);
std::string to_string(MatchingVariant v);

struct MatchingLabel {
  std::vector<int> tau;
  std::vector<int> sigma;
  int k = 0;  // 1-based
};

EdgeSet build_matching_x(const GraphEncoding& enc, const MatchingLabel& label, MatchingVariant variant);

/// Every labeling that rebuilds x; empty when x is not an X-graph.
std::vector<MatchingLabel> matching_labelings(const GraphEncoding& enc, const EdgeSet& x, MatchingVariant variant);

std::vector<EdgeSet> matching_forward(const GraphEncoding& enc, const EdgeSet& x, MatchingVariant variant);
std::vector<EdgeSet> matching_backward(const GraphEncoding& enc, const EdgeSet& y, MatchingVariant variant);

/// Counts on the representatives tau = sigma = identity (one per k) and
/// checks no-PM/PM on all of them and their partners, then on `samples`
/// random labelings. Explicit mode (n <= 12) also materializes the
/// neighborhood relation of the representatives. Also evaluates the scheme
/// w = 1, u = 1/sqrt(n) on removed edges and sqrt(n) on added edges, v = 1/u.
CountedInstance gen_bipartite_matching(int n, InstanceMode mode, MatchingVariant variant = MatchingVariant::TwoPaths,
                                       std::uint64_t seed = 0, int samples = kDefaultSamples);

/// Explicit relation over all permutations of n symbols (n even, 4..8):
/// sigma is paired with sigma after swapping the position p of symbol 0 with
/// any position q of the other parity.
CountedInstance gen_invert_permutation_relation(int n);

}  // namespace qadv
