#include "qadv/named_functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qadv {

NamedFunction parse_named_function(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "or") return NamedFunction::Or;
  if (key == "and") return NamedFunction::And;
  if (key == "parity") return NamedFunction::Parity;
  if (key == "majority") return NamedFunction::Majority;
  if (key == "element_distinctness") return NamedFunction::ElementDistinctness;
  if (key == "invert_permutation") return NamedFunction::InvertPermutation;
  throw std::invalid_argument("unknown function name: " + std::string(name));
}

std::string to_string(NamedFunction f) {
  switch (f) {
    case NamedFunction::Or: return "or";
    case NamedFunction::And: return "and";
    case NamedFunction::Parity: return "parity";
    case NamedFunction::Majority: return "majority";
    case NamedFunction::ElementDistinctness: return "element_distinctness";
    case NamedFunction::InvertPermutation: return "invert_permutation";
  }
  throw std::logic_error("unhandled NamedFunction");
}

FunctionTable gen_named(NamedFunction f, int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const bool boolean = f == NamedFunction::Or || f == NamedFunction::And || f == NamedFunction::Parity ||
                       f == NamedFunction::Majority;
  if (boolean && k != 2) throw std::invalid_argument(to_string(f) + " needs k = 2");
  if (f == NamedFunction::Majority && n % 2 == 0) throw std::invalid_argument("majority needs odd n");
  if (f == NamedFunction::ElementDistinctness && k < 2) throw std::invalid_argument("element_distinctness needs k >= 2");
  if (f == NamedFunction::InvertPermutation && k != n) throw std::invalid_argument("invert_permutation needs k = n");

  const InputIndex size = table_size(n, k);
  std::vector<Value> values(size, Value::Undefined);
  InputWord word(static_cast<std::size_t>(n), 0);
  std::vector<int> seen(static_cast<std::size_t>(k));
  for (InputIndex index = 0; index < size; ++index) {
    bool result = false;
    bool defined = true;
    switch (f) {
      case NamedFunction::Or: result = std::any_of(word.begin(), word.end(), [](Symbol s) { return s != 0; }); break;
      case NamedFunction::And: result = std::all_of(word.begin(), word.end(), [](Symbol s) { return s != 0; }); break;
      case NamedFunction::Parity: result = std::count(word.begin(), word.end(), Symbol{1}) % 2 == 1; break;
      case NamedFunction::Majority: result = 2 * std::count(word.begin(), word.end(), Symbol{1}) > n; break;
      case NamedFunction::ElementDistinctness:
      case NamedFunction::InvertPermutation: {
        std::fill(seen.begin(), seen.end(), 0);
        for (Symbol s : word) ++seen[s];
        const bool collision = std::any_of(seen.begin(), seen.end(), [](int c) { return c > 1; });
        if (f == NamedFunction::ElementDistinctness) {
          result = collision;
        } else if (collision) {
          defined = false;
        } else {
          const auto zero_at = std::find(word.begin(), word.end(), Symbol{0}) - word.begin();
          result = (zero_at + 1) % 2 == 0;
        }
        break;
      }
    }
    if (defined) values[index] = result ? Value::One : Value::Zero;
    // Little-endian increment.
    for (int i = 0; i < n; ++i) {
      if (++word[i] < k) break;
      word[i] = 0;
    }
  }
  return FunctionTable(n, k, std::move(values));
}

}  // namespace qadv
