#pragma once

#include "qadv/adversary.hpp"
#include "qadv/function_table.hpp"

#include <cstdint>
#include <string>

namespace qadv {

/// Knobs for ascend_scheme. Identical (instance, config) pairs give
/// bit-identical output.
///
/// Both ascent phases start with step s = 1. A rejected move multiplies s by
/// `step_shrink` (phase 1); a sweep that gains less than `tolerance`
/// relative to its starting value does the same (phase 2). Each phase stops
/// after `max_iters` iterations or once s drops below `tolerance`.
struct AscentConfig {
  std::int64_t max_iters = 1000;
  std::uint64_t seed = 0;
  Rational step_shrink{1, 2};
  Rational tolerance{1, 1000000000};
};

void check_config(const AscentConfig& cfg);

struct Alb1Search {
  BoundReport report;
  RelationInstance witness;
  std::uint64_t relations_examined = 0;
};

inline constexpr int kMaxAlb1Pairs = 24;

/// Maximizes alb1_bound over every nonempty R ⊆ f^-1(0) × f^-1(1) (X and Y
/// are the supports of R). The first maximizer in enumeration order is
/// returned as the witness.
///
/// Throws std::domain_error when f lacks a 0- or 1-input and
/// std::length_error when |f^-1(0)|·|f^-1(1)| exceeds pair_cap or pair_cap
/// exceeds kMaxAlb1Pairs.
Alb1Search exact_alb1_small(const FunctionTable& f, int pair_cap = kMaxAlb1Pairs);

struct AscentResult {
  WeightScheme scheme;
  BoundReport report;  // alb4_value of scheme
  std::int64_t iterations = 0;
  std::int64_t accepted_moves = 0;
};

/// Deterministic local ascent on alb4_value over schemes with u·v = w².
///
/// The search works on log-weights in double precision, with u = w·r and
/// v = w/r. Phase 1 rescales every w(x,y) and split ratio r(x,y,i) at once
/// along the gradient of a soft-min of the log terms, raising the
/// temperature as it goes. Phase 2 rescales one w, one r, or a whole group
/// (all pairs of one input, all ratios of one (input, position)) and keeps
/// only moves that raise the true minimum. The final point, and copies
/// snapped onto its dominant support (unit weights, or small weights set to
/// zero), are converted exactly to rationals; the best exact value is kept
/// if it beats the initial scheme, which is returned unchanged otherwise.
/// The result is a valid lower bound certificate, not a claim of optimality.
AscentResult ascend_scheme(const RelationInstance& rel, const WeightScheme& init, const AscentConfig& cfg);

inline constexpr std::size_t kMaxFullRelationPairs = 4096;

struct BestBound {
  BoundReport report;
  RelationInstance relation;
  WeightScheme scheme;
  std::string start;  // "alb1-witness", "dominant-support" or "full-uniform"
};

/// Best alb4 value found by ascending from the exact Alb1 witness (when the
/// pair grid is small enough), from the uniform scheme on the full relation
/// f^-1(0) × f^-1(1), and from the uniform scheme on each dominant support of
/// the full-relation result (pairs above a wide gap in the weights). Ties go
/// to the earlier start. Self-checks the result against sqrt(N·C-).
BestBound best_known_bound(const FunctionTable& f, const AscentConfig& cfg);

}  // namespace qadv
