#pragma once

#include "qadv/adversary.hpp"
#include "qadv/function_table.hpp"
#include "qadv/optimizer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qadv {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

/// One inequality value <= ceiling, both exact.
struct TheoremCheck {
  std::string theorem;  // "thm7", "thm9", "thm10"
  Verdict verdict = Verdict::NotApplicable;
  Rational value;
  Rational ceiling;
  std::string note;
  std::map<std::string, std::int64_t> witnesses;
};

struct SchemeLimits {
  TheoremCheck thm7;   // alb4 value^2 <= N·C-
  TheoremCheck thm9;   // alb4 value^2 <= N·CI (total f)
  TheoremCheck thm10;  // some x, y, i, j with w_x·w_y <= C0·C1·u_{x,i}·v_{y,j} (total f)
  bool all_pass() const;
};

/// Checks a valid scheme against the three certificate ceilings.
///
/// thm7 holds for partial functions too. thm9 and thm10 need a total f and
/// report NotApplicable otherwise. thm9 uses ci_exact; when its search cap
/// trips, the ceiling falls back to N·C- and the note says so. Throws
/// std::invalid_argument for invalid schemes or relations that disagree
/// with f.
SchemeLimits verify_scheme_limits(const FunctionTable& f, const RelationInstance& rel, const WeightScheme& s);

struct ConversionCheck {
  bool pass = false;
  Rational alb2_squared;
  Rational alb3_squared;
};

/// alb3_value(rel, alb2_to_scheme(rel)) equals alb2_bound(rel) exactly.
ConversionCheck verify_conversion(const RelationInstance& rel);

struct SweepRow {
  std::uint64_t id = 0;  // truth-table index: bit t is f at input t
  int c0 = 0;
  int c1 = 0;
  int ci = 0;
  bool ci_is_upper = false;
  Rational best_bound_squared;
  Rational n_cminus;
  Rational n_ci;
  Rational c0c1;
  Verdict thm7 = Verdict::Fail;
  Verdict thm9 = Verdict::Fail;
  Verdict thm10 = Verdict::Fail;
  bool from_complement = false;  // derived from the row of the complement
  bool pass() const;
};

struct SweepOptions {
  bool dedupe_complements = true;
  /// Fraction of deduplicated rows that are also computed directly and
  /// compared with the derived row.
  Rational check_fraction{1, 10};
  std::uint64_t check_seed = 0;
};

struct SweepResult {
  int n_vars = 0;
  std::vector<SweepRow> rows;  // ordered by id
  std::int64_t failures = 0;
  std::int64_t complement_checks = 0;
};

/// Every non-constant total Boolean function on n_vars <= 4 bits. n_vars = 4
/// is slow; callers should gate it.
SweepResult sweep_total_functions(int n_vars, const AscentConfig& cfg, const SweepOptions& options = {});

std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);

struct GammaRow {
  std::vector<Value> profile;  // f by Hamming weight 0..N
  int gamma = 0;
  int c_minus = 0;
  Rational ratio;  // (N - gamma) / C-
};

struct GammaReport {
  int n_vars = 0;
  std::vector<GammaRow> rows;
  Rational min_ratio;
  Rational max_ratio;
};

/// (N - Γ(f)) / C-(f) over every non-constant symmetric Boolean f on n_vars
/// bits (1 <= n_vars <= 10).
GammaReport gamma_report(int n_vars);
std::string gamma_report_to_json(const GammaReport& report);

struct DistinctnessReport {
  int n = 0;
  int c0 = 0;
  int c1 = 0;
  Rational ceiling_squared;  // N·min(C0, C1)
  double ceiling = 0.0;
  std::string note;
};

/// Certificate ceiling for Element Distinctness with N = k = n (n <= 7).
DistinctnessReport element_distinctness_report(int n);
std::string distinctness_report_to_json(const DistinctnessReport& report);

}  // namespace qadv
