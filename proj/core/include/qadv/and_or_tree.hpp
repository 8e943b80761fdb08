#pragma once

#include "qadv/certificates.hpp"
#include "qadv/function_table.hpp"

#include <bitset>
#include <cstdint>
#include <span>

namespace qadv {

/// Complete binary AND-OR tree of even height h with N = 2^h leaves.
///
/// The root is level 1 and is an AND gate; gates alternate by level, so odd
/// levels are AND and even levels are OR. Leaves are positions 1..N from left
/// to right.
class AndOrTree {
 public:
  static constexpr int kMaxHeight = 8;
  static constexpr int kMaxTableHeight = 4;
  using LeafSet = std::bitset<(1u << kMaxHeight)>;

  explicit AndOrTree(int height);

  int height() const { return height_; }
  int leaves() const { return 1 << height_; }

  bool evaluate(std::span<const Symbol> x) const;

  /// The inductive certificate of x: a 0-valued AND or 1-valued OR gate takes
  /// the certificate of its left-most child with the same value; any other
  /// gate takes the union over both children.
  LeafSet certificate(std::span<const Symbol> x) const;

  /// True when fixing x on `leaves` forces the root to f(x), decided by
  /// three-valued evaluation.
  bool certifies(std::span<const Symbol> x, const LeafSet& fixed) const;

  /// Truth table; heights up to kMaxTableHeight.
  FunctionTable table() const;

  /// The inductive assignment over every input; heights up to kMaxTableHeight.
  CertificateAssignment assignment() const;

 private:
  int height_;
};

PositionSet to_positions(const AndOrTree::LeafSet& set, int leaves);

struct IntersectionSample {
  std::uint64_t pairs = 0;
  int max_intersection = 0;
  std::uint64_t pairs_at_max = 0;
};

/// Draws `pairs` random input pairs with opposite values (seeded), checks
/// both inductive certificates with three-valued evaluation and records the
/// largest intersection. An invalid certificate throws std::logic_error.
IntersectionSample sample_certificate_intersections(const AndOrTree& tree, std::uint64_t pairs, std::uint64_t seed);

/// Largest intersection over every opposite-valued pair, after checking every
/// certificate; heights up to kMaxTableHeight.
int exhaustive_max_intersection(const AndOrTree& tree);

}  // namespace qadv
