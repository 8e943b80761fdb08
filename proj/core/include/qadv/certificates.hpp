#pragma once

#include "qadv/function_table.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qadv {

/// Sorted, duplicate-free list of 1-based input positions.
using PositionSet = std::vector<int>;

/// One certificate set per defined input, keyed by input index.
using CertificateAssignment = std::map<InputIndex, PositionSet>;

struct MinCertificate {
  int size = 0;
  PositionSet witness;
};

struct CertStats {
  int c0 = 0;
  int c1 = 0;
  int c = 0;        // max(c0, c1)
  int c_minus = 0;  // min(c0, c1)

  friend bool operator==(const CertStats&, const CertStats&) = default;
};

/// True iff every defined y agreeing with x on `positions` has f(y) = f(x).
/// Throws std::invalid_argument if f(x) is undefined or a position is out of range.
bool certificate_check(const FunctionTable& f, std::span<const Symbol> x, const PositionSet& positions);

/// Smallest certificate for x; among equal sizes the lexicographically
/// smallest sorted position list wins.
MinCertificate min_certificate(const FunctionTable& f, std::span<const Symbol> x);

/// C(f, x) for every input index, -1 where f is undefined. Shares one
/// projection table per position subset across all inputs, so it is much
/// faster than calling min_certificate in a loop.
std::vector<int> certificate_complexities(const FunctionTable& f);

/// C0, C1, C and C-. A value class with no inputs contributes 0.
CertStats cert_stats(const FunctionTable& f);

/// All inclusion-minimal certificate sets of x, in lexicographic order.
std::vector<PositionSet> minimal_certificates(const FunctionTable& f, std::span<const Symbol> x);

struct CiResult {
  int value = 0;
  CertificateAssignment witness;
  std::uint64_t nodes = 0;  // search nodes visited
};

inline constexpr std::uint64_t kCiNodeCap = 10'000'000;

/// Certificate intersection complexity by exhaustive search over
/// inclusion-minimal certificate sets, threshold by threshold, with forward
/// checking. Requires a total, non-constant f.
///
/// Throws std::domain_error for constant or partial functions and
/// std::length_error once `node_cap` search nodes have been visited.
CiResult ci_exact(const FunctionTable& f, std::uint64_t node_cap = kCiNodeCap);

/// max over f(x) != f(y) of |CS_x ∩ CS_y|. Every set is re-checked with
/// certificate_check and every defined input must be assigned; violations
/// throw std::invalid_argument.
int ci_upper(const FunctionTable& f, const CertificateAssignment& assignment);

/// Lexicographically-first minimum certificate for every defined input. Its
/// ci_upper never exceeds C-(f).
CertificateAssignment min_certificate_assignment(const FunctionTable& f);

bool is_symmetric(const FunctionTable& f);

/// Value on each Hamming-weight level 0..N of a symmetric Boolean function.
std::vector<Value> weight_profile(const FunctionTable& f);

/// Gamma(f) = min |2t - N + 1| over levels t with f_t != f_{t+1}.
/// Throws std::invalid_argument unless f is a total, symmetric, non-constant
/// Boolean function.
int gamma_symmetric(const FunctionTable& f);
int gamma_from_profile(std::span<const Value> profile);

/// Certificate statistics of a symmetric Boolean function computed from its
/// weight profile: a certificate for a weight-w input fixes a ones and c
/// zeros, and is valid iff the profile is constant on [a, N - c].
CertStats symmetric_cert_stats(std::span<const Value> profile);

std::string assignment_to_json(const CertificateAssignment& assignment);
CertificateAssignment assignment_from_json(std::string_view text);

}  // namespace qadv
