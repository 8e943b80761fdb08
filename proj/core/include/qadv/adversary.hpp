#pragma once

#include "qadv/rational.hpp"
#include "qadv/relation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qadv {

/// Weight maps w(x,y), u(x,y,i), v(x,y,i) over a relation.
///
/// w is stored per pair; u and v per slot (pair, differing position) in the
/// relation's flat slot order. The actual u and v are the stored values times
/// sqrt(radicand); a radicand of 1 is an ordinary rational scheme. The
/// radicand lets schemes such as u = sqrt(l_max)/l_{x,i} stay exact: every
/// bound expression is homogeneous of degree 2 in (u, v), so it only ever
/// sees sqrt(radicand)^2.
class WeightScheme {
 public:
  WeightScheme(std::vector<Rational> w, std::vector<Rational> u, std::vector<Rational> v,
               Rational radicand = Rational(1));

  /// w = u = v = 1 everywhere.
  static WeightScheme uniform(const RelationInstance& rel);

  const std::vector<Rational>& w() const { return w_; }
  const std::vector<Rational>& u() const { return u_; }
  const std::vector<Rational>& v() const { return v_; }
  const Rational& radicand() const { return radicand_; }
  bool has_radical() const { return radicand_ != 1; }

  /// Throws std::invalid_argument when sizes do not match rel.
  void check_domain(const RelationInstance& rel) const;

  /// Multiplies every w, u and v by c > 0 (radicand unchanged).
  WeightScheme scaled(const Rational& c) const;

 private:
  std::vector<Rational> w_;
  std::vector<Rational> u_;
  std::vector<Rational> v_;
  Rational radicand_;
};

/// w_x, w_y, u_{x,i}, v_{y,i} (the latter two without the radical factor),
/// dense over local index and 0-based position.
struct SchemeAggregates {
  std::vector<Rational> wx;
  std::vector<Rational> wy;
  std::vector<Rational> ux;  // [x * N + i]
  std::vector<Rational> vy;  // [y * N + i]
};

SchemeAggregates aggregate(const RelationInstance& rel, const WeightScheme& s);

struct SchemeViolation {
  enum class Kind { NegativeEntry, ProductBelowWeight, NonPositiveWx, NonPositiveWy };
  Kind kind;
  std::size_t pair = 0;   // pair index (entries and products)
  int position = -1;      // 0-based position, -1 when not applicable
  std::size_t input = 0;  // local x or y index (aggregate kinds)
};

struct SchemeValidation {
  bool ok = true;
  std::vector<SchemeViolation> violations;
};

/// Checks u·v >= w^2 at every slot, non-negativity of every entry and
/// positivity of every w_x and w_y. Zero entries are admitted as long as the
/// aggregates stay positive. Throws std::invalid_argument on a domain
/// mismatch.
SchemeValidation validate_scheme(const RelationInstance& rel, const WeightScheme& s);

enum class BoundMethod { Alb1, Alb2, Alb3, Alb4 };

std::string to_string(BoundMethod m);

/// A bound value with the parameters that witness it. value_squared is
/// exact; value is its floating square root for display only.
struct BoundReport {
  BoundMethod method = BoundMethod::Alb1;
  Rational value_squared;
  double value = 0.0;
  std::map<std::string, std::int64_t> witnesses;
};

BoundReport make_report(BoundMethod method, Rational value_squared);

/// m·m'/(l·l'), with m, m' the minimum degrees and l, l' the maximum
/// per-position partner counts.
BoundReport alb1_bound(const RelationInstance& rel);

/// m·m'/l_max where l_max = max over related (x, y) and differing i of
/// l_{x,i}·l_{y,i}.
BoundReport alb2_bound(const RelationInstance& rel);

/// (min over x, i of w_x/u_{x,i}) · (min over y, j of w_y/v_{y,j}). Positions
/// with a zero aggregate count as +inf and never realize a minimum.
BoundReport alb3_value(const RelationInstance& rel, const WeightScheme& s);

/// min over related (x, y) with w(x,y) > 0 and differing i of
/// w_x·w_y / (u_{x,i}·v_{y,i}).
BoundReport alb4_value(const RelationInstance& rel, const WeightScheme& s);

/// w = 1, u = sqrt(l_max)/l_{x,i}, v = sqrt(l_max)/l_{y,i}. Its alb3_value
/// equals alb2_bound exactly.
WeightScheme alb2_to_scheme(const RelationInstance& rel);

/// Drops pairs with w = 0 and any inputs that become isolated. Returns the
/// reduced relation and the matching scheme.
std::pair<RelationInstance, WeightScheme> prune_zero_weights(const RelationInstance& rel, const WeightScheme& s);

// JSON documents.
//
// Relation: {"k":k,"n":N,"r":[[x,y],...],"x":[...],"y":[...]} with table
//           indices; n and k are optional when a table is supplied.
// Scheme:   {"u":[[x,y,i,num,den],...],"v":[...],"w":[[x,y,num,den],...]}
//           with 1-based i. Radical schemes add "sqrt_lmax_factor":true and
//           "lmax":L, and their u/v entries hold the squared actual values.
// num/den are JSON integers when they fit in 64 bits, decimal strings
// otherwise; readers accept both.

std::string relation_to_json(const RelationInstance& rel);
RelationInstance relation_from_json(const FunctionTable& f, std::string_view text);

/// Without a table: needs n and k and takes x as the 0-side as given.
RelationInstance relation_from_json(std::string_view text);

std::string scheme_to_json(const RelationInstance& rel, const WeightScheme& s);

/// Zero-weight pairs are kept; use prune_zero_weights afterwards if needed.
/// Throws std::invalid_argument when the triples do not cover rel's domain
/// exactly.
WeightScheme scheme_from_json(const RelationInstance& rel, std::string_view text);

}  // namespace qadv
