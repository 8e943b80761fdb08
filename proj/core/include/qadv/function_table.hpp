#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qadv {

enum class Value : std::uint8_t { Zero = 0, One = 1, Undefined = 2 };

char to_char(Value v);
Value opposite(Value v);

using Symbol = std::uint8_t;
using InputWord = std::vector<Symbol>;
using InputIndex = std::uint64_t;

/// Largest table the library will materialize (k^N entries).
inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 24;

/// Little-endian base-k index: position 1 (word[0]) is least significant.
InputIndex encode(std::span<const Symbol> word, int alphabet);
InputWord decode(InputIndex index, int n_vars, int alphabet);

/// k^N, or throws std::length_error when it exceeds kMaxTableEntries.
std::uint64_t table_size(int n_vars, int alphabet);

/// A total or partial function f: [k]^N -> {0,1}, stored as a value array in
/// index order. Immutable after construction.
class FunctionTable {
 public:
  FunctionTable(int n_vars, int alphabet, std::vector<Value> values);

  /// Builds from a string over {0,1,*} in index order.
  static FunctionTable from_symbols(int n_vars, int alphabet, std::string_view symbols);

  int n_vars() const { return n_vars_; }
  int alphabet() const { return alphabet_; }
  std::uint64_t size() const { return values_.size(); }

  Value value(InputIndex index) const { return values_[index]; }
  Value eval(std::span<const Symbol> word) const;
  const std::vector<Value>& values() const { return values_; }

  bool is_total() const { return undefined_count_ == 0; }
  bool is_constant() const { return zero_count_ == 0 || one_count_ == 0; }
  std::uint64_t count(Value v) const;
  std::vector<InputIndex> indices_with(Value v) const;

  /// Swaps Zero and One; Undefined entries stay undefined.
  FunctionTable complement() const;

  std::string symbols() const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.n_vars_ == b.n_vars_ && a.alphabet_ == b.alphabet_ && a.values_ == b.values_;
  }

 private:
  int n_vars_;
  int alphabet_;
  std::vector<Value> values_;
  std::uint64_t zero_count_ = 0;
  std::uint64_t one_count_ = 0;
  std::uint64_t undefined_count_ = 0;
};

// Table documents. The plain-text form is
//
//   n=<N> k=<k>
//   <k^N characters from {0,1,*}>
//
// and the JSON form is {"k":k,"n":N,"values":"..."}. Writers emit the
// canonical form (trailing newline for .tt, sorted keys for JSON), so reading
// and re-writing a canonical document reproduces it byte for byte.

FunctionTable parse_tt(std::string_view text);
FunctionTable parse_table_json(std::string_view text);

/// Sniffs the first non-space character: '{' means JSON, anything else .tt.
FunctionTable load_table(std::string_view text);
FunctionTable load_table_file(const std::string& path);

std::string to_tt(const FunctionTable& f);
std::string to_table_json(const FunctionTable& f);

}  // namespace qadv
