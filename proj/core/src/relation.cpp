#include "qadv/relation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qadv {

namespace {

std::optional<InputIndex> index_if_fits(const InputWord& word, int alphabet) {
  // 64-bit index capacity check: alphabet^N must stay below 2^63.
  long double capacity = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    capacity *= alphabet;
    if (capacity > 9.2e18L) return std::nullopt;
  }
  return encode(word, alphabet);
}

}  // namespace

RelationInstance RelationInstance::from_table(const FunctionTable& f,
                                              std::span<const std::pair<InputIndex, InputIndex>> pairs,
                                              bool swap_roles) {
  std::vector<InputIndex> xs, ys;
  for (const auto& [a, b] : pairs) {
    xs.push_back(swap_roles ? b : a);
    ys.push_back(swap_roles ? a : b);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return from_table_sets(f, swap_roles ? std::span<const InputIndex>(ys) : std::span<const InputIndex>(xs),
                         swap_roles ? std::span<const InputIndex>(xs) : std::span<const InputIndex>(ys), pairs,
                         swap_roles);
}

RelationInstance RelationInstance::from_table_sets(const FunctionTable& f, std::span<const InputIndex> xs_in,
                                                   std::span<const InputIndex> ys_in,
                                                   std::span<const std::pair<InputIndex, InputIndex>> pairs_in,
                                                   bool swap_roles) {
  if (pairs_in.empty()) throw std::invalid_argument("relation is empty");
  // Normalize orientation so that X always carries f = 0.
  std::span<const InputIndex> zero_side = swap_roles ? ys_in : xs_in;
  std::span<const InputIndex> one_side = swap_roles ? xs_in : ys_in;
  std::map<InputIndex, std::uint32_t> x_of, y_of;
  for (InputIndex x : zero_side) {
    if (x >= f.size() || f.value(x) != Value::Zero) {
      throw std::invalid_argument("X member " + std::to_string(x) + " is not a 0-input");
    }
    x_of.emplace(x, 0);
  }
  for (InputIndex y : one_side) {
    if (y >= f.size() || f.value(y) != Value::One) {
      throw std::invalid_argument("Y member " + std::to_string(y) + " is not a 1-input");
    }
    y_of.emplace(y, 0);
  }
  std::vector<std::pair<InputIndex, InputIndex>> normalized;
  normalized.reserve(pairs_in.size());
  for (const auto& [a, b] : pairs_in) {
    const InputIndex x = swap_roles ? b : a;
    const InputIndex y = swap_roles ? a : b;
    if (!x_of.contains(x) || !y_of.contains(y)) {
      throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not in X x Y");
    }
    normalized.emplace_back(x, y);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  // Prune isolated members, then assign local indices in table-index order.
  std::map<InputIndex, std::uint32_t> used_x, used_y;
  for (const auto& [x, y] : normalized) {
    used_x.emplace(x, 0);
    used_y.emplace(y, 0);
  }
  RelationInstance rel;
  rel.n_vars_ = f.n_vars();
  rel.alphabet_ = f.alphabet();
  for (auto& [index, local] : used_x) {
    local = static_cast<std::uint32_t>(rel.xs_.size());
    rel.xs_.push_back(decode(index, f.n_vars(), f.alphabet()));
    rel.x_indices_.push_back(index);
  }
  for (auto& [index, local] : used_y) {
    local = static_cast<std::uint32_t>(rel.ys_.size());
    rel.ys_.push_back(decode(index, f.n_vars(), f.alphabet()));
    rel.y_indices_.push_back(index);
  }
  for (const auto& [x, y] : normalized) rel.pairs_.push_back({used_x[x], used_y[y]});
  rel.finalize();
  return rel;
}

RelationInstance RelationInstance::from_words(int n_vars, int alphabet, std::vector<InputWord> zeros,
                                              std::vector<InputWord> ones, std::vector<Pair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("relation is empty");
  if (n_vars < 1 || n_vars > 65535) throw std::invalid_argument("n_vars out of range");
  for (const auto& w : zeros) {
    if (w.size() != static_cast<std::size_t>(n_vars)) throw std::invalid_argument("X word has the wrong length");
  }
  for (const auto& w : ones) {
    if (w.size() != static_cast<std::size_t>(n_vars)) throw std::invalid_argument("Y word has the wrong length");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<std::int64_t> x_map(zeros.size(), -1), y_map(ones.size(), -1);
  for (const auto& p : pairs) {
    if (p.x >= zeros.size() || p.y >= ones.size()) throw std::invalid_argument("pair index out of range");
    x_map[p.x] = 0;
    y_map[p.y] = 0;
  }
  RelationInstance rel;
  rel.n_vars_ = n_vars;
  rel.alphabet_ = alphabet;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (x_map[i] < 0) continue;
    x_map[i] = static_cast<std::int64_t>(rel.xs_.size());
    rel.xs_.push_back(std::move(zeros[i]));
  }
  for (std::size_t j = 0; j < ones.size(); ++j) {
    if (y_map[j] < 0) continue;
    y_map[j] = static_cast<std::int64_t>(rel.ys_.size());
    rel.ys_.push_back(std::move(ones[j]));
  }
  for (const auto& p : pairs) {
    rel.pairs_.push_back({static_cast<std::uint32_t>(x_map[p.x]), static_cast<std::uint32_t>(y_map[p.y])});
  }
  bool all_fit = true;
  for (const auto& w : rel.xs_) {
    auto idx = index_if_fits(w, alphabet);
    if (!idx) {
      all_fit = false;
      break;
    }
    rel.x_indices_.push_back(*idx);
  }
  for (const auto& w : rel.ys_) {
    if (!all_fit) break;
    auto idx = index_if_fits(w, alphabet);
    if (!idx) {
      all_fit = false;
      break;
    }
    rel.y_indices_.push_back(*idx);
  }
  if (!all_fit) {
    rel.x_indices_.clear();
    rel.y_indices_.clear();
  }
  rel.finalize();
  return rel;
}

void RelationInstance::finalize() {
  const auto n = static_cast<std::size_t>(n_vars_);
  x_degree_.assign(xs_.size(), 0);
  y_degree_.assign(ys_.size(), 0);
  lx_.assign(xs_.size() * n, 0);
  ly_.assign(ys_.size() * n, 0);
  slot_offsets_.assign(1, 0);
  diff_positions_.clear();
  for (const Pair& p : pairs_) {
    const InputWord& x = xs_[p.x];
    const InputWord& y = ys_[p.y];
    const std::size_t before = diff_positions_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != y[i]) {
        diff_positions_.push_back(static_cast<std::uint16_t>(i));
        ++lx_[p.x * n + i];
        ++ly_[p.y * n + i];
      }
    }
    if (diff_positions_.size() == before) {
      throw std::invalid_argument("a related pair has identical inputs");
    }
    slot_offsets_.push_back(diff_positions_.size());
    ++x_degree_[p.x];
    ++y_degree_[p.y];
  }
}

std::optional<InputIndex> RelationInstance::x_index(std::size_t i) const {
  if (x_indices_.empty()) return std::nullopt;
  return x_indices_[i];
}

std::optional<InputIndex> RelationInstance::y_index(std::size_t j) const {
  if (y_indices_.empty()) return std::nullopt;
  return y_indices_[j];
}

std::optional<std::size_t> RelationInstance::find_x(InputIndex index) const {
  const auto it = std::find(x_indices_.begin(), x_indices_.end(), index);
  if (it == x_indices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - x_indices_.begin());
}

std::optional<std::size_t> RelationInstance::find_y(InputIndex index) const {
  const auto it = std::find(y_indices_.begin(), y_indices_.end(), index);
  if (it == y_indices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - y_indices_.begin());
}

std::optional<std::size_t> RelationInstance::find_pair(std::uint32_t x, std::uint32_t y) const {
  const Pair key{x, y};
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

}  // namespace qadv
