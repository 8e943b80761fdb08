#include "qadv/adversary.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qadv {

namespace {

std::int64_t report_x(const RelationInstance& rel, std::size_t x) {
  const auto index = rel.x_index(x);
  return static_cast<std::int64_t>(index ? *index : x);
}

std::int64_t report_y(const RelationInstance& rel, std::size_t y) {
  const auto index = rel.y_index(y);
  return static_cast<std::int64_t>(index ? *index : y);
}

void require_valid(const RelationInstance& rel, const WeightScheme& s) {
  const auto check = validate_scheme(rel, s);
  if (!check.ok) {
    throw std::invalid_argument("weight scheme violates its constraints at " +
                                std::to_string(check.violations.size()) + " place(s)");
  }
}

}  // namespace

WeightScheme::WeightScheme(std::vector<Rational> w, std::vector<Rational> u, std::vector<Rational> v,
                           Rational radicand)
    : w_(std::move(w)), u_(std::move(u)), v_(std::move(v)), radicand_(std::move(radicand)) {
  if (u_.size() != v_.size()) throw std::invalid_argument("u and v must cover the same slots");
  if (radicand_ <= 0) throw std::invalid_argument("radicand must be positive");
  for (auto* list : {&w_, &u_, &v_}) {
    for (auto& q : *list) q.canonicalize();
  }
  radicand_.canonicalize();
}

WeightScheme WeightScheme::uniform(const RelationInstance& rel) {
  return WeightScheme(std::vector<Rational>(rel.pair_count(), Rational(1)),
                      std::vector<Rational>(rel.slot_count(), Rational(1)),
                      std::vector<Rational>(rel.slot_count(), Rational(1)));
}

void WeightScheme::check_domain(const RelationInstance& rel) const {
  if (w_.size() != rel.pair_count() || u_.size() != rel.slot_count() || v_.size() != rel.slot_count()) {
    throw std::invalid_argument("weight scheme domain does not match the relation");
  }
}

WeightScheme WeightScheme::scaled(const Rational& c) const {
  if (c <= 0) throw std::invalid_argument("scale factor must be positive");
  auto times = [&](const std::vector<Rational>& in) {
    std::vector<Rational> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] * c;
    return out;
  };
  return WeightScheme(times(w_), times(u_), times(v_), radicand_);
}

SchemeAggregates aggregate(const RelationInstance& rel, const WeightScheme& s) {
  s.check_domain(rel);
  const auto n = static_cast<std::size_t>(rel.n_vars());
  SchemeAggregates a;
  a.wx.assign(rel.x_count(), Rational(0));
  a.wy.assign(rel.y_count(), Rational(0));
  a.ux.assign(rel.x_count() * n, Rational(0));
  a.vy.assign(rel.y_count() * n, Rational(0));
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    a.wx[pairs[p].x] += s.w()[p];
    a.wy[pairs[p].y] += s.w()[p];
    const std::size_t base = rel.slot_offset(p);
    const auto diff = rel.diff(p);
    for (std::size_t t = 0; t < diff.size(); ++t) {
      a.ux[pairs[p].x * n + diff[t]] += s.u()[base + t];
      a.vy[pairs[p].y * n + diff[t]] += s.v()[base + t];
    }
  }
  return a;
}

SchemeValidation validate_scheme(const RelationInstance& rel, const WeightScheme& s) {
  s.check_domain(rel);
  SchemeValidation out;
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Rational& w = s.w()[p];
    if (w < 0) out.violations.push_back({SchemeViolation::Kind::NegativeEntry, p, -1, 0});
    const Rational w2 = w * w;
    const std::size_t base = rel.slot_offset(p);
    const auto diff = rel.diff(p);
    for (std::size_t t = 0; t < diff.size(); ++t) {
      const Rational& u = s.u()[base + t];
      const Rational& v = s.v()[base + t];
      if (u < 0 || v < 0) {
        out.violations.push_back({SchemeViolation::Kind::NegativeEntry, p, diff[t], 0});
        continue;
      }
      if (u * v * s.radicand() < w2) {
        out.violations.push_back({SchemeViolation::Kind::ProductBelowWeight, p, diff[t], 0});
      }
    }
  }
  const auto agg = aggregate(rel, s);
  for (std::size_t x = 0; x < agg.wx.size(); ++x) {
    if (agg.wx[x] <= 0) out.violations.push_back({SchemeViolation::Kind::NonPositiveWx, 0, -1, x});
  }
  for (std::size_t y = 0; y < agg.wy.size(); ++y) {
    if (agg.wy[y] <= 0) out.violations.push_back({SchemeViolation::Kind::NonPositiveWy, 0, -1, y});
  }
  out.ok = out.violations.empty();
  return out;
}

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::Alb1: return "Alb1";
    case BoundMethod::Alb2: return "Alb2";
    case BoundMethod::Alb3: return "Alb3";
    case BoundMethod::Alb4: return "Alb4";
  }
  return "?";
}

BoundReport make_report(BoundMethod method, Rational value_squared) {
  BoundReport r;
  r.method = method;
  r.value_squared = std::move(value_squared);
  r.value_squared.canonicalize();
  r.value = std::sqrt(r.value_squared.get_d());
  return r;
}

BoundReport alb1_bound(const RelationInstance& rel) {
  if (rel.pair_count() == 0) throw std::invalid_argument("relation is empty");
  std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t m_prime = m;
  std::uint32_t l = 0, l_prime = 0;
  for (std::size_t x = 0; x < rel.x_count(); ++x) {
    m = std::min(m, rel.x_degree(x));
    for (int i = 0; i < rel.n_vars(); ++i) l = std::max(l, rel.lx(x, i));
  }
  for (std::size_t y = 0; y < rel.y_count(); ++y) {
    m_prime = std::min(m_prime, rel.y_degree(y));
    for (int i = 0; i < rel.n_vars(); ++i) l_prime = std::max(l_prime, rel.ly(y, i));
  }
  BoundReport r = make_report(BoundMethod::Alb1, Rational(mpz_class(m) * m_prime, mpz_class(l) * l_prime));
  r.witnesses = {{"m", m}, {"m_prime", m_prime}, {"l", l}, {"l_prime", l_prime}};
  return r;
}

BoundReport alb2_bound(const RelationInstance& rel) {
  if (rel.pair_count() == 0) throw std::invalid_argument("relation is empty");
  std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t m_prime = m;
  for (std::size_t x = 0; x < rel.x_count(); ++x) m = std::min(m, rel.x_degree(x));
  for (std::size_t y = 0; y < rel.y_count(); ++y) m_prime = std::min(m_prime, rel.y_degree(y));
  std::uint64_t l_max = 0;
  std::size_t arg_pair = 0;
  int arg_pos = 0;
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::uint16_t i : rel.diff(p)) {
      const std::uint64_t prod = std::uint64_t{rel.lx(pairs[p].x, i)} * rel.ly(pairs[p].y, i);
      if (prod > l_max) {
        l_max = prod;
        arg_pair = p;
        arg_pos = i;
      }
    }
  }
  BoundReport r = make_report(BoundMethod::Alb2, Rational(mpz_class(m) * m_prime, mpz_class(l_max)));
  r.witnesses = {{"m", m},
                 {"m_prime", m_prime},
                 {"l_max", static_cast<std::int64_t>(l_max)},
                 {"x", report_x(rel, pairs[arg_pair].x)},
                 {"y", report_y(rel, pairs[arg_pair].y)},
                 {"i", arg_pos + 1}};
  return r;
}

BoundReport alb3_value(const RelationInstance& rel, const WeightScheme& s) {
  require_valid(rel, s);
  const auto agg = aggregate(rel, s);
  const auto n = static_cast<std::size_t>(rel.n_vars());
  std::optional<Rational> best_x, best_y;
  std::size_t ax = 0, ay = 0, ai = 0, aj = 0;
  for (std::size_t x = 0; x < rel.x_count(); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& u = agg.ux[x * n + i];
      if (u <= 0) continue;
      Rational ratio = agg.wx[x] / u;
      if (!best_x || ratio < *best_x) {
        best_x = std::move(ratio);
        ax = x;
        ai = i;
      }
    }
  }
  for (std::size_t y = 0; y < rel.y_count(); ++y) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = agg.vy[y * n + j];
      if (v <= 0) continue;
      Rational ratio = agg.wy[y] / v;
      if (!best_y || ratio < *best_y) {
        best_y = std::move(ratio);
        ay = y;
        aj = j;
      }
    }
  }
  if (!best_x || !best_y) throw std::invalid_argument("scheme has no positive u or v aggregate");
  BoundReport r = make_report(BoundMethod::Alb3, (*best_x) * (*best_y) / s.radicand());
  r.witnesses = {{"x", report_x(rel, ax)},
                 {"i", static_cast<std::int64_t>(ai) + 1},
                 {"y", report_y(rel, ay)},
                 {"j", static_cast<std::int64_t>(aj) + 1}};
  return r;
}

BoundReport alb4_value(const RelationInstance& rel, const WeightScheme& s) {
  require_valid(rel, s);
  const auto agg = aggregate(rel, s);
  const auto n = static_cast<std::size_t>(rel.n_vars());
  std::optional<Rational> best;
  std::size_t arg_pair = 0;
  int arg_pos = 0;
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (s.w()[p] == 0) continue;
    const Rational numerator = agg.wx[pairs[p].x] * agg.wy[pairs[p].y];
    for (std::uint16_t i : rel.diff(p)) {
      const Rational denominator = agg.ux[pairs[p].x * n + i] * agg.vy[pairs[p].y * n + i];
      if (denominator == 0) {
        throw std::logic_error("zero denominator on a positively weighted pair");
      }
      Rational term = numerator / denominator;
      if (!best || term < *best) {
        best = std::move(term);
        arg_pair = p;
        arg_pos = i;
      }
    }
  }
  if (!best) throw std::invalid_argument("scheme has no positively weighted pair");
  BoundReport r = make_report(BoundMethod::Alb4, (*best) / s.radicand());
  r.witnesses = {{"x", report_x(rel, pairs[arg_pair].x)},
                 {"y", report_y(rel, pairs[arg_pair].y)},
                 {"i", arg_pos + 1}};
  return r;
}

WeightScheme alb2_to_scheme(const RelationInstance& rel) {
  if (rel.pair_count() == 0) throw std::invalid_argument("relation is empty");
  const auto l_max = alb2_bound(rel).witnesses.at("l_max");
  std::vector<Rational> w(rel.pair_count(), Rational(1));
  std::vector<Rational> u(rel.slot_count()), v(rel.slot_count());
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::size_t base = rel.slot_offset(p);
    const auto diff = rel.diff(p);
    for (std::size_t t = 0; t < diff.size(); ++t) {
      u[base + t] = Rational(1, rel.lx(pairs[p].x, diff[t]));
      v[base + t] = Rational(1, rel.ly(pairs[p].y, diff[t]));
    }
  }
  return WeightScheme(std::move(w), std::move(u), std::move(v), Rational(l_max));
}

std::pair<RelationInstance, WeightScheme> prune_zero_weights(const RelationInstance& rel, const WeightScheme& s) {
  s.check_domain(rel);
  std::vector<InputWord> xs, ys;
  for (std::size_t i = 0; i < rel.x_count(); ++i) xs.push_back(rel.x_word(i));
  for (std::size_t j = 0; j < rel.y_count(); ++j) ys.push_back(rel.y_word(j));
  std::vector<RelationInstance::Pair> kept;
  std::vector<Rational> w, u, v;
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (s.w()[p] == 0) continue;
    kept.push_back(pairs[p]);
    w.push_back(s.w()[p]);
    const std::size_t base = rel.slot_offset(p);
    for (std::size_t t = 0; t < rel.diff(p).size(); ++t) {
      u.push_back(s.u()[base + t]);
      v.push_back(s.v()[base + t]);
    }
  }
  if (kept.empty()) throw std::invalid_argument("every pair has zero weight");
  // from_words keeps pair order and remaps indices monotonically, so the
  // slot layout of the kept pairs is unchanged.
  RelationInstance reduced =
      RelationInstance::from_words(rel.n_vars(), rel.alphabet(), std::move(xs), std::move(ys), std::move(kept));
  return {std::move(reduced), WeightScheme(std::move(w), std::move(u), std::move(v), s.radicand())};
}

}  // namespace qadv
