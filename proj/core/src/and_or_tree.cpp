#include "qadv/and_or_tree.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace qadv {

namespace {

struct NodeResult {
  bool value;
  AndOrTree::LeafSet cert;
};

// Node covering leaves [first, first + width) at the given 1-based level.
NodeResult visit(std::span<const Symbol> x, int level, int first, int width) {
  if (width == 1) {
    NodeResult leaf{x[first] != 0, {}};
    leaf.cert.set(first);
    return leaf;
  }
  const bool is_and = level % 2 == 1;
  const NodeResult left = visit(x, level + 1, first, width / 2);
  const NodeResult right = visit(x, level + 1, first + width / 2, width / 2);
  const bool value = is_and ? (left.value && right.value) : (left.value || right.value);
  // The deciding value: 0 for AND, 1 for OR.
  const bool decisive = !is_and;
  if (value == decisive) return {value, left.value == decisive ? left.cert : right.cert};
  return {value, left.cert | right.cert};
}

// Three-valued evaluation: -1 unknown, otherwise 0 or 1.
int visit3(std::span<const Symbol> x, const AndOrTree::LeafSet& fixed, int level, int first, int width) {
  if (width == 1) return fixed.test(first) ? (x[first] != 0 ? 1 : 0) : -1;
  const int a = visit3(x, fixed, level + 1, first, width / 2);
  const int b = visit3(x, fixed, level + 1, first + width / 2, width / 2);
  if (level % 2 == 1) {
    if (a == 0 || b == 0) return 0;
    return a == 1 && b == 1 ? 1 : -1;
  }
  if (a == 1 || b == 1) return 1;
  return a == 0 && b == 0 ? 0 : -1;
}

}  // namespace

AndOrTree::AndOrTree(int height) : height_(height) {
  if (height < 2 || height % 2 != 0) throw std::invalid_argument("AND-OR tree height must be even and at least 2");
  if (height > kMaxHeight) throw std::length_error("AND-OR tree height is limited to 8");
}

bool AndOrTree::evaluate(std::span<const Symbol> x) const {
  if (static_cast<int>(x.size()) != leaves()) throw std::invalid_argument("input length does not match the tree");
  return visit(x, 1, 0, leaves()).value;
}

AndOrTree::LeafSet AndOrTree::certificate(std::span<const Symbol> x) const {
  if (static_cast<int>(x.size()) != leaves()) throw std::invalid_argument("input length does not match the tree");
  return visit(x, 1, 0, leaves()).cert;
}

bool AndOrTree::certifies(std::span<const Symbol> x, const LeafSet& fixed) const {
  if (static_cast<int>(x.size()) != leaves()) throw std::invalid_argument("input length does not match the tree");
  const int forced = visit3(x, fixed, 1, 0, leaves());
  return forced >= 0 && (forced == 1) == evaluate(x);
}

FunctionTable AndOrTree::table() const {
  if (height_ > kMaxTableHeight) throw std::length_error("AND-OR truth tables are limited to height 4");
  const int n = leaves();
  const InputIndex size = table_size(n, 2);
  std::vector<Value> values(size);
  for (InputIndex i = 0; i < size; ++i) values[i] = evaluate(decode(i, n, 2)) ? Value::One : Value::Zero;
  return FunctionTable(n, 2, std::move(values));
}

CertificateAssignment AndOrTree::assignment() const {
  if (height_ > kMaxTableHeight) throw std::length_error("AND-OR assignments are limited to height 4");
  const int n = leaves();
  CertificateAssignment out;
  const InputIndex size = table_size(n, 2);
  for (InputIndex i = 0; i < size; ++i) out.emplace(i, to_positions(certificate(decode(i, n, 2)), n));
  return out;
}

PositionSet to_positions(const AndOrTree::LeafSet& set, int leaves) {
  PositionSet out;
  for (int i = 0; i < leaves; ++i) {
    if (set.test(i)) out.push_back(i + 1);
  }
  return out;
}

IntersectionSample sample_certificate_intersections(const AndOrTree& tree, std::uint64_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = tree.leaves();
  InputWord x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  const auto fill = [&](InputWord& w) {
    for (int i = 0; i < n; i += 64) {
      const std::uint64_t bits = rng();
      for (int t = 0; t < 64 && i + t < n; ++t) w[i + t] = static_cast<Symbol>((bits >> t) & 1);
    }
  };
  IntersectionSample out;
  while (out.pairs < pairs) {
    fill(x);
    fill(y);
    if (tree.evaluate(x) == tree.evaluate(y)) continue;
    const auto cx = tree.certificate(x);
    const auto cy = tree.certificate(y);
    if (!tree.certifies(x, cx) || !tree.certifies(y, cy)) {
      throw std::logic_error("inductive AND-OR certificate failed to certify a sampled input");
    }
    const int common = static_cast<int>((cx & cy).count());
    if (common > out.max_intersection) {
      out.max_intersection = common;
      out.pairs_at_max = 0;
    }
    if (common == out.max_intersection) ++out.pairs_at_max;
    ++out.pairs;
  }
  return out;
}

int exhaustive_max_intersection(const AndOrTree& tree) {
  if (tree.height() > AndOrTree::kMaxTableHeight) throw std::length_error("exhaustive intersection is limited to height 4");
  const int n = tree.leaves();
  const InputIndex size = table_size(n, 2);
  // At most 16 leaves, so certificates fit in 32 bits; distinct ones suffice.
  std::vector<std::uint32_t> zeros, ones;
  for (InputIndex i = 0; i < size; ++i) {
    const auto word = decode(i, n, 2);
    const auto cert = tree.certificate(word);
    if (!tree.certifies(word, cert)) throw std::logic_error("inductive AND-OR certificate failed to certify an input");
    (tree.evaluate(word) ? ones : zeros).push_back(static_cast<std::uint32_t>(cert.to_ulong()));
  }
  for (auto* list : {&zeros, &ones}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  int worst = 0;
  for (std::uint32_t a : zeros) {
    for (std::uint32_t b : ones) worst = std::max(worst, std::popcount(a & b));
  }
  return worst;
}

}  // namespace qadv
