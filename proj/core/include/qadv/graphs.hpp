#pragma once

#include "qadv/function_table.hpp"

#include <bitset>
#include <cstdint>
#include <utility>
#include <vector>

namespace qadv {

inline constexpr int kMaxEdgePositions = 256;

/// Edge set indexed by 0-based position (the 1-based encoding position minus
/// one).
using EdgeSet = std::bitset<kMaxEdgePositions>;

/// Adjacency-matrix input encoding for simple graphs.
///
/// General graphs on n vertices: edge (a, b) with a < b sits at position
/// b(b-1)/2 + a + 1, N = n(n-1)/2. Bipartite graphs with n left and n right
/// vertices: edge (i, j) sits at position i·n + j + 1, N = n².
class GraphEncoding {
 public:
  enum class Kind { General, Bipartite };

  GraphEncoding(Kind kind, int n_vertices);

  Kind kind() const { return kind_; }
  int n_vertices() const { return n_; }
  int positions() const { return positions_; }

  /// 1-based position of an edge. For bipartite graphs a is left, b right.
  int position(int a, int b) const;
  std::pair<int, int> edge(int position) const;

  /// 0-based bit index helpers for EdgeSet.
  int bit(int a, int b) const { return position(a, b) - 1; }

  InputWord to_word(const EdgeSet& edges) const;

 private:
  Kind kind_;
  int n_;
  int positions_;
};

/// Adjacency lists; vertices are 0..n-1 for general graphs and 0..2n-1 for
/// bipartite graphs (left i is i, right j is n + j).
std::vector<std::vector<int>> adjacency(const GraphEncoding& enc, const EdgeSet& edges);

/// Maximum bipartite matching size by augmenting paths.
int max_bipartite_matching(const GraphEncoding& enc, const EdgeSet& edges);
bool has_perfect_matching_bipartite(const GraphEncoding& enc, const EdgeSet& edges);

/// Exhaustive perfect-matching search for general graphs (n <= 24).
bool has_perfect_matching_general(const GraphEncoding& enc, const EdgeSet& edges);

bool is_two_colorable(const GraphEncoding& enc, const EdgeSet& edges);

/// Vertex lists of connected components, each in traversal order from its
/// smallest vertex.
std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adj);

/// Lengths of the cycles when every vertex has degree 2, otherwise empty.
std::vector<int> cycle_lengths(const GraphEncoding& enc, const EdgeSet& edges);

}  // namespace qadv
