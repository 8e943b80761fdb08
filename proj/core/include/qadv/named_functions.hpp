#pragma once

#include "qadv/function_table.hpp"

#include <string>
#include <string_view>

namespace qadv {

enum class NamedFunction { Or, And, Parity, Majority, ElementDistinctness, InvertPermutation };

/// Accepts "or", "and", "parity", "majority", "element_distinctness" and
/// "invert_permutation" (hyphens allowed in place of underscores).
NamedFunction parse_named_function(std::string_view name);
std::string to_string(NamedFunction f);

/// Truth table of a named family.
///
/// or, and, parity and majority are Boolean (k must be 2; majority needs odd
/// n). element_distinctness is 1 iff two positions hold the same symbol
/// (k >= 2). invert_permutation needs k = n: inputs that are not
/// permutations of the symbols 0..n-1 are Undefined, and f = 1 iff the
/// 1-based position holding symbol 0 is even.
FunctionTable gen_named(NamedFunction f, int n, int k);

}  // namespace qadv
