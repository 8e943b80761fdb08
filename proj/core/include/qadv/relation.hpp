#pragma once

#include "qadv/function_table.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qadv {

/// The raw material of every adversary bound: X ⊆ f^-1(0), Y ⊆ f^-1(1) and a
/// relation R ⊆ X × Y.
///
/// X and Y are stored as lists of input words with local indices; pairs refer
/// to those local indices. Inputs that occur in no pair are dropped at
/// construction, so every retained x and y has degree at least one. For each
/// pair the positions where the two words differ are precomputed; per-slot
/// data (u and v in a weight scheme) is laid out in the same flat order,
/// pair by pair.
class RelationInstance {
 public:
  struct Pair {
    std::uint32_t x;
    std::uint32_t y;
    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
  };

  /// Pairs of table indices. X and Y become the supports of the pairs. With
  /// `swap_roles` the first component of each pair is the 1-input.
  /// Throws std::invalid_argument on empty input, undefined or wrongly
  /// valued inputs.
  static RelationInstance from_table(const FunctionTable& f,
                                     std::span<const std::pair<InputIndex, InputIndex>> pairs,
                                     bool swap_roles = false);

  /// As above but X and Y are given explicitly and every pair must lie in
  /// X × Y. Isolated members of X or Y are pruned.
  static RelationInstance from_table_sets(const FunctionTable& f, std::span<const InputIndex> xs,
                                          std::span<const InputIndex> ys,
                                          std::span<const std::pair<InputIndex, InputIndex>> pairs,
                                          bool swap_roles = false);

  /// For inputs that live outside any materialized table (graph properties).
  /// The caller guarantees the value split; each pair must differ somewhere.
  static RelationInstance from_words(int n_vars, int alphabet, std::vector<InputWord> zeros,
                                     std::vector<InputWord> ones, std::vector<Pair> pairs);

  int n_vars() const { return n_vars_; }
  int alphabet() const { return alphabet_; }

  std::size_t x_count() const { return xs_.size(); }
  std::size_t y_count() const { return ys_.size(); }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t slot_count() const { return diff_positions_.size(); }

  const InputWord& x_word(std::size_t i) const { return xs_[i]; }
  const InputWord& y_word(std::size_t j) const { return ys_[j]; }

  /// Table indices, present for table-backed relations and for word
  /// relations whose inputs fit a 64-bit index.
  std::optional<InputIndex> x_index(std::size_t i) const;
  std::optional<InputIndex> y_index(std::size_t j) const;
  bool has_indices() const { return !x_indices_.empty(); }

  std::span<const Pair> pairs() const { return pairs_; }

  /// 0-based positions where pair p's words differ, ascending.
  std::span<const std::uint16_t> diff(std::size_t p) const {
    return {diff_positions_.data() + slot_offsets_[p], slot_offsets_[p + 1] - slot_offsets_[p]};
  }
  std::size_t slot_offset(std::size_t p) const { return slot_offsets_[p]; }

  std::uint32_t x_degree(std::size_t i) const { return x_degree_[i]; }
  std::uint32_t y_degree(std::size_t j) const { return y_degree_[j]; }

  /// l_{x,i}: partners of x that differ from it at 0-based position i.
  std::uint32_t lx(std::size_t x, int position) const {
    return lx_[x * static_cast<std::size_t>(n_vars_) + position];
  }
  std::uint32_t ly(std::size_t y, int position) const {
    return ly_[y * static_cast<std::size_t>(n_vars_) + position];
  }

  /// Local index lookup by table index (table-backed relations only).
  std::optional<std::size_t> find_x(InputIndex index) const;
  std::optional<std::size_t> find_y(InputIndex index) const;

  /// Index of pair (x, y) in pairs(), if present.
  std::optional<std::size_t> find_pair(std::uint32_t x, std::uint32_t y) const;

 private:
  RelationInstance() = default;
  void finalize();

  int n_vars_ = 0;
  int alphabet_ = 2;
  std::vector<InputWord> xs_;
  std::vector<InputWord> ys_;
  std::vector<InputIndex> x_indices_;
  std::vector<InputIndex> y_indices_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> slot_offsets_;
  std::vector<std::uint16_t> diff_positions_;
  std::vector<std::uint32_t> x_degree_;
  std::vector<std::uint32_t> y_degree_;
  std::vector<std::uint32_t> lx_;
  std::vector<std::uint32_t> ly_;
};

}  // namespace qadv
