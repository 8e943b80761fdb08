#include "qadv/optimizer.hpp"

#include "qadv/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

namespace qadv {

void check_config(const AscentConfig& cfg) {
  if (cfg.max_iters < 0) throw std::invalid_argument("max_iters must be non-negative");
  if (cfg.step_shrink <= 0 || cfg.step_shrink >= 1) throw std::invalid_argument("step_shrink must lie in (0,1)");
  if (cfg.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
}

Alb1Search exact_alb1_small(const FunctionTable& f, int pair_cap) {
  if (f.count(Value::Zero) == 0 || f.count(Value::One) == 0) {
    throw std::domain_error("exact_alb1_small needs both 0- and 1-inputs");
  }
  if (pair_cap > kMaxAlb1Pairs) throw std::length_error("pair_cap may not exceed 24");
  const auto zeros = f.indices_with(Value::Zero);
  const auto ones = f.indices_with(Value::One);
  const std::uint64_t grid = zeros.size() * ones.size();
  if (grid > static_cast<std::uint64_t>(pair_cap)) {
    throw std::length_error("pair grid of " + std::to_string(grid) + " exceeds the cap of " +
                            std::to_string(pair_cap));
  }
  const int n = f.n_vars();
  const std::size_t nx = zeros.size(), ny = ones.size();
  const auto words_x = [&] {
    std::vector<InputWord> w;
    for (auto i : zeros) w.push_back(decode(i, n, f.alphabet()));
    return w;
  }();
  const auto words_y = [&] {
    std::vector<InputWord> w;
    for (auto i : ones) w.push_back(decode(i, n, f.alphabet()));
    return w;
  }();

  // Pair (a, b) gets bit a * ny + b.
  using Mask = std::uint32_t;
  std::vector<Mask> row(nx, 0), col(ny, 0);
  std::vector<Mask> row_diff(nx * n, 0), col_diff(ny * n, 0);
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = 0; b < ny; ++b) {
      const Mask bit = Mask{1} << (a * ny + b);
      row[a] |= bit;
      col[b] |= bit;
      for (int i = 0; i < n; ++i) {
        if (words_x[a][i] != words_y[b][i]) {
          row_diff[a * n + i] |= bit;
          col_diff[b * n + i] |= bit;
        }
      }
    }
  }

  std::uint64_t best_num = 0, best_den = 1;
  Mask best_mask = 0;
  const Mask last = grid == 32 ? ~Mask{0} : (Mask{1} << grid) - 1;
  std::uint64_t examined = 0;
  for (Mask mask = 1;; ++mask) {
    ++examined;
    int m = std::numeric_limits<int>::max(), m_prime = m;
    int l = 0, l_prime = 0;
    for (std::size_t a = 0; a < nx; ++a) {
      const int deg = std::popcount(mask & row[a]);
      if (deg == 0) continue;
      m = std::min(m, deg);
      for (int i = 0; i < n; ++i) l = std::max(l, std::popcount(mask & row_diff[a * n + i]));
    }
    for (std::size_t b = 0; b < ny; ++b) {
      const int deg = std::popcount(mask & col[b]);
      if (deg == 0) continue;
      m_prime = std::min(m_prime, deg);
      for (int i = 0; i < n; ++i) l_prime = std::max(l_prime, std::popcount(mask & col_diff[b * n + i]));
    }
    const std::uint64_t num = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m_prime);
    const std::uint64_t den = static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(l_prime);
    if (best_mask == 0 || num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best_mask = mask;
    }
    if (mask == last) break;
  }

  std::vector<std::pair<InputIndex, InputIndex>> pairs;
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = 0; b < ny; ++b) {
      if (best_mask & (Mask{1} << (a * ny + b))) pairs.emplace_back(zeros[a], ones[b]);
    }
  }
  RelationInstance witness = RelationInstance::from_table(f, pairs);
  BoundReport report = alb1_bound(witness);
  return {std::move(report), std::move(witness), examined};
}

namespace {

constexpr double kMaxLog = 60.0;
constexpr double kMinGain = 1e-12;
constexpr std::size_t kMaxSnaps = 4;

// Relative thresholds 2^(mid - top) at the widest gaps (at least a factor 2)
// between consecutive sorted log2-weights, widest first.
std::vector<double> gap_thresholds(std::vector<double> lw, std::size_t limit) {
  std::sort(lw.begin(), lw.end());
  if (lw.empty()) return {};
  std::vector<std::pair<double, double>> gaps;  // (width, midpoint)
  for (std::size_t i = 1; i < lw.size(); ++i) {
    if (lw[i] - lw[i - 1] >= 1.0) gaps.emplace_back(lw[i] - lw[i - 1], 0.5 * (lw[i] + lw[i - 1]));
  }
  std::stable_sort(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (gaps.size() > limit) gaps.resize(limit);
  std::vector<double> out;
  for (const auto& g : gaps) out.push_back(std::exp2(g.second - lw.back()));
  return out;
}

class Ascent {
 public:
  Ascent(const RelationInstance& rel, const WeightScheme& init) : rel_(rel) {
    const auto n = static_cast<std::size_t>(rel.n_vars());
    const double half_log_radicand = 0.5 * std::log2(init.radicand().get_d());
    const auto pairs = rel.pairs();
    log_w_.assign(pairs.size(), 0.0);
    active_.assign(pairs.size(), false);
    log_r_.assign(rel.slot_count(), 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const double w = init.w()[p].get_d();
      if (w <= 0) continue;
      active_[p] = true;
      log_w_[p] = std::clamp(std::log2(w), -kMaxLog, kMaxLog);
      const std::size_t base = rel.slot_offset(p);
      for (std::size_t t = 0; t < rel.diff(p).size(); ++t) {
        // Tighten u·v >= w^2 to equality keeping the ratio u/v.
        const double lu = std::log2(init.u()[base + t].get_d()) + half_log_radicand;
        const double lv = std::log2(init.v()[base + t].get_d()) + half_log_radicand;
        log_r_[base + t] = std::clamp(0.5 * (lu - lv), -kMaxLog, kMaxLog);
      }
    }
    w_.assign(pairs.size(), 0.0);
    r_.assign(rel.slot_count(), 1.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) refresh_pair(p);
    for (std::size_t s = 0; s < r_.size(); ++s) r_[s] = std::exp2(log_r_[s]);

    // Move coordinates: single pairs, single slots, pair groups per input and
    // slot groups per (input, position).
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      pair_groups_.push_back({p});
      const std::size_t base = rel.slot_offset(p);
      for (std::size_t t = 0; t < rel.diff(p).size(); ++t) slot_groups_.push_back({base + t});
    }
    std::vector<std::vector<std::size_t>> by_x(rel.x_count()), by_y(rel.y_count());
    std::vector<std::vector<std::size_t>> by_xi(rel.x_count() * n), by_yi(rel.y_count() * n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      by_x[pairs[p].x].push_back(p);
      by_y[pairs[p].y].push_back(p);
      const std::size_t base = rel.slot_offset(p);
      const auto diff = rel.diff(p);
      for (std::size_t t = 0; t < diff.size(); ++t) {
        by_xi[pairs[p].x * n + diff[t]].push_back(base + t);
        by_yi[pairs[p].y * n + diff[t]].push_back(base + t);
      }
    }
    for (auto* groups : {&by_x, &by_y}) {
      for (auto& g : *groups) {
        if (g.size() > 1) pair_groups_.push_back(std::move(g));
      }
    }
    for (auto* groups : {&by_xi, &by_yi}) {
      for (auto& g : *groups) {
        if (g.size() > 1) slot_groups_.push_back(std::move(g));
      }
    }
  }

  double evaluate() {
    const auto n = static_cast<std::size_t>(rel_.n_vars());
    const auto pairs = rel_.pairs();
    wx_.assign(rel_.x_count(), 0.0);
    wy_.assign(rel_.y_count(), 0.0);
    ux_.assign(rel_.x_count() * n, 0.0);
    vy_.assign(rel_.y_count() * n, 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const double w = w_[p];
      wx_[pairs[p].x] += w;
      wy_[pairs[p].y] += w;
      const std::size_t base = rel_.slot_offset(p);
      const auto diff = rel_.diff(p);
      for (std::size_t t = 0; t < diff.size(); ++t) {
        ux_[pairs[p].x * n + diff[t]] += w * r_[base + t];
        vy_[pairs[p].y * n + diff[t]] += w / r_[base + t];
      }
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const double num = wx_[pairs[p].x] * wy_[pairs[p].y];
      for (std::uint16_t i : rel_.diff(p)) {
        best = std::min(best, num / (ux_[pairs[p].x * n + i] * vy_[pairs[p].y * n + i]));
      }
    }
    return best;
  }

  // One move: coordinate c (pair groups first, then slot groups) by delta.
  void apply(std::size_t c, double delta) {
    if (c < pair_groups_.size()) {
      for (std::size_t p : pair_groups_[c]) {
        log_w_[p] = std::clamp(log_w_[p] + delta, -kMaxLog, kMaxLog);
        refresh_pair(p);
      }
    } else {
      for (std::size_t s : slot_groups_[c - pair_groups_.size()]) {
        log_r_[s] = std::clamp(log_r_[s] + delta, -kMaxLog, kMaxLog);
        r_[s] = std::exp2(log_r_[s]);
      }
    }
  }

  std::size_t coordinates() const { return pair_groups_.size() + slot_groups_.size(); }

  WeightScheme exact_scheme() const {
    const auto pairs = rel_.pairs();
    std::vector<Rational> w(pairs.size(), Rational(0));
    std::vector<Rational> u(rel_.slot_count(), Rational(0)), v(rel_.slot_count(), Rational(0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      w[p] = rational_from_double(w_[p]);
      const std::size_t base = rel_.slot_offset(p);
      for (std::size_t t = 0; t < rel_.diff(p).size(); ++t) {
        const Rational r = rational_from_double(r_[base + t]);
        u[base + t] = w[p] * r;
        v[base + t] = w[p] / r;
      }
    }
    return WeightScheme(std::move(w), std::move(u), std::move(v));
  }

  std::vector<double> gap_thresholds(std::size_t limit) const {
    std::vector<double> lw;
    for (std::size_t p = 0; p < log_w_.size(); ++p) {
      if (active_[p]) lw.push_back(log_w_[p]);
    }
    return qadv::gap_thresholds(std::move(lw), limit);
  }

  struct Snapshot {
    std::vector<double> log_w, log_r;
  };
  Snapshot snapshot() const { return {log_w_, log_r_}; }
  void restore(const Snapshot& s) {
    log_w_ = s.log_w;
    log_r_ = s.log_r;
    for (std::size_t p = 0; p < w_.size(); ++p) refresh_pair(p);
    for (std::size_t t = 0; t < r_.size(); ++t) r_[t] = std::exp2(log_r_[t]);
  }

  // Soft-min of the natural-log terms at temperature beta; also returns the
  // plain minimum. Fills the term cache used by gradient().
  double soft_value(double beta, double& plain) {
    plain = evaluate();
    const auto n = static_cast<std::size_t>(rel_.n_vars());
    const auto pairs = rel_.pairs();
    terms_.assign(rel_.slot_count(), 0.0);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const double num = std::log(wx_[pairs[p].x]) + std::log(wy_[pairs[p].y]);
      const std::size_t base = rel_.slot_offset(p);
      const auto diff = rel_.diff(p);
      for (std::size_t t = 0; t < diff.size(); ++t) {
        terms_[base + t] = num - std::log(ux_[pairs[p].x * n + diff[t]]) - std::log(vy_[pairs[p].y * n + diff[t]]);
        lo = std::min(lo, terms_[base + t]);
      }
    }
    double z = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const std::size_t base = rel_.slot_offset(p);
      for (std::size_t t = 0; t < rel_.diff(p).size(); ++t) z += std::exp(-beta * (terms_[base + t] - lo));
    }
    soft_lo_ = lo;
    soft_z_ = z;
    return lo - std::log(z) / beta;
  }

  // Gradient of the soft-min in the log2 coordinates; valid after soft_value.
  void gradient(double beta, std::vector<double>& ga, std::vector<double>& gb) const {
    const auto n = static_cast<std::size_t>(rel_.n_vars());
    const auto pairs = rel_.pairs();
    std::vector<double> px(rel_.x_count(), 0.0), py(rel_.y_count(), 0.0);
    std::vector<double> pux(rel_.x_count() * n, 0.0), pvy(rel_.y_count() * n, 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const std::size_t base = rel_.slot_offset(p);
      const auto diff = rel_.diff(p);
      for (std::size_t t = 0; t < diff.size(); ++t) {
        const double pi = std::exp(-beta * (terms_[base + t] - soft_lo_)) / soft_z_;
        px[pairs[p].x] += pi;
        py[pairs[p].y] += pi;
        pux[pairs[p].x * n + diff[t]] += pi;
        pvy[pairs[p].y * n + diff[t]] += pi;
      }
    }
    ga.assign(pairs.size(), 0.0);
    gb.assign(rel_.slot_count(), 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      const double w = w_[p];
      double g = w * (px[pairs[p].x] / wx_[pairs[p].x] + py[pairs[p].y] / wy_[pairs[p].y]);
      const std::size_t base = rel_.slot_offset(p);
      const auto diff = rel_.diff(p);
      for (std::size_t t = 0; t < diff.size(); ++t) {
        const std::size_t xi = pairs[p].x * n + diff[t], yi = pairs[p].y * n + diff[t];
        const double du = pux[xi] * w * r_[base + t] / ux_[xi];
        const double dv = pvy[yi] * w / r_[base + t] / vy_[yi];
        g -= du + dv;
        gb[base + t] = dv - du;
      }
      ga[p] = g;
    }
  }

  // Moves every coordinate at once: log w += eta * ga, log r += eta * gb.
  void step(const std::vector<double>& ga, const std::vector<double>& gb, double eta) {
    double top = -kMaxLog;
    for (std::size_t p = 0; p < log_w_.size(); ++p) {
      if (!active_[p]) continue;
      log_w_[p] += eta * ga[p];
      top = std::max(top, log_w_[p]);
    }
    // The bound is invariant under a common rescaling of w; keep the largest at 1.
    for (std::size_t p = 0; p < log_w_.size(); ++p) {
      if (!active_[p]) continue;
      log_w_[p] = std::clamp(log_w_[p] - top, -kMaxLog, kMaxLog);
      refresh_pair(p);
    }
    for (std::size_t t = 0; t < log_r_.size(); ++t) {
      log_r_[t] = std::clamp(log_r_[t] + eta * gb[t], -kMaxLog, kMaxLog);
      r_[t] = std::exp2(log_r_[t]);
    }
  }

  // Schemes snapped to the support {w >= tau * max w}: unit weights on the
  // support, and the current weights with the rest zeroed. Empty when the
  // support misses an input.
  std::vector<WeightScheme> snapped(double tau) const {
    const auto pairs = rel_.pairs();
    double top = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) top = std::max(top, w_[p]);
    std::vector<bool> keep(pairs.size(), false);
    std::vector<bool> seen_x(rel_.x_count(), false), seen_y(rel_.y_count(), false);
    bool pruned = false;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!active_[p]) continue;
      keep[p] = w_[p] >= tau * top;
      pruned = pruned || !keep[p];
      if (keep[p]) seen_x[pairs[p].x] = seen_y[pairs[p].y] = true;
    }
    const auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    if (!all(seen_x) || !all(seen_y)) return {};
    std::vector<WeightScheme> out;
    for (bool unit : {true, false}) {
      if (!unit && !pruned) continue;
      std::vector<Rational> w(pairs.size(), Rational(0));
      std::vector<Rational> u(rel_.slot_count(), Rational(0)), v(rel_.slot_count(), Rational(0));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!keep[p]) continue;
        w[p] = unit ? Rational(1) : rational_from_double(w_[p]);
        const std::size_t base = rel_.slot_offset(p);
        for (std::size_t t = 0; t < rel_.diff(p).size(); ++t) {
          const Rational r = unit ? Rational(1) : rational_from_double(r_[base + t]);
          u[base + t] = w[p] * r;
          v[base + t] = w[p] / r;
        }
      }
      out.emplace_back(std::move(w), std::move(u), std::move(v));
    }
    return out;
  }

 private:
  void refresh_pair(std::size_t p) { w_[p] = active_[p] ? std::exp2(log_w_[p]) : 0.0; }

  const RelationInstance& rel_;
  std::vector<double> log_w_, log_r_, w_, r_;
  std::vector<bool> active_;
  std::vector<std::vector<std::size_t>> pair_groups_, slot_groups_;
  std::vector<double> wx_, wy_, ux_, vy_;
  std::vector<double> terms_;
  double soft_lo_ = 0, soft_z_ = 1;
};

}  // namespace

AscentResult ascend_scheme(const RelationInstance& rel, const WeightScheme& init, const AscentConfig& cfg) {
  check_config(cfg);
  const BoundReport initial = alb4_value(rel, init);  // validates init
  if (cfg.max_iters == 0) return {init, initial, 0, 0};

  Ascent state(rel, init);
  const double shrink = cfg.step_shrink.get_d();
  const double tolerance = cfg.tolerance.get_d();
  AscentResult out{init, initial, 0, 0};

  // Phase 1: joint steps along the gradient of a soft-min surrogate. A step
  // is accepted when it raises the surrogate; the temperature rises after
  // each accepted step so the surrogate approaches the true minimum.
  double best = state.evaluate();
  auto best_state = state.snapshot();
  {
    double beta = 4.0, eta = 1.0, plain = 0;
    std::vector<double> ga, gb;
    std::int64_t iters = 0;
    while (iters < cfg.max_iters && eta >= tolerance) {
      ++iters;
      const double here = state.soft_value(beta, plain);
      state.gradient(beta, ga, gb);
      const auto before = state.snapshot();
      state.step(ga, gb, eta);
      double moved_plain = 0;
      if (state.soft_value(beta, moved_plain) > here) {
        ++out.accepted_moves;
        eta = std::min(eta * 1.5, 64.0);
        beta = std::min(beta * 1.05, 1e6);
        if (moved_plain > best * (1.0 + kMinGain)) {
          best = moved_plain;
          best_state = state.snapshot();
        }
      } else {
        state.restore(before);
        eta *= shrink;
      }
    }
    out.iterations += iters;
    state.restore(best_state);
  }

  // Phase 2: single-coordinate and group moves in shuffled order, +step then
  // -step, keeping only strict improvements of the true minimum.
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(state.coordinates());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  double step = 1.0;
  double current = state.evaluate();
  std::int64_t sweeps = 0;
  while (sweeps < cfg.max_iters && step >= tolerance) {
    ++sweeps;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    const double sweep_start = current;
    for (std::size_t c : order) {
      for (double delta : {step, -step}) {
        state.apply(c, delta);
        const double candidate = state.evaluate();
        if (candidate > current * (1.0 + kMinGain)) {
          current = candidate;
          ++out.accepted_moves;
          break;
        }
        state.apply(c, -delta);
      }
    }
    if (current - sweep_start < tolerance * sweep_start) step *= shrink;
  }
  out.iterations += sweeps;
  // Restore cached aggregates before exporting (apply/revert leaves them dirty).
  state.evaluate();

  // Exact candidates: the final point and its snaps onto dominant supports.
  std::vector<WeightScheme> candidates;
  candidates.push_back(state.exact_scheme());
  for (double tau : state.gap_thresholds(kMaxSnaps)) {
    for (auto& s : state.snapped(tau)) candidates.push_back(std::move(s));
  }
  for (auto& candidate : candidates) {
    BoundReport report = alb4_value(rel, candidate);
    if (report.value_squared > out.report.value_squared) {
      out.scheme = std::move(candidate);
      out.report = std::move(report);
    }
  }
  return out;
}

BestBound best_known_bound(const FunctionTable& f, const AscentConfig& cfg) {
  if (f.is_constant()) throw std::domain_error("best_known_bound needs a non-constant function");
  const auto zeros = f.indices_with(Value::Zero);
  const auto ones = f.indices_with(Value::One);
  if (zeros.size() * ones.size() > kMaxFullRelationPairs) {
    throw std::length_error("full relation exceeds 4096 pairs");
  }

  std::optional<BestBound> best;
  const auto consider = [&](RelationInstance rel, const WeightScheme& init, const char* start) {
    AscentResult result = ascend_scheme(rel, init, cfg);
    if (!best || result.report.value_squared > best->report.value_squared) {
      best = BestBound{std::move(result.report), std::move(rel), std::move(result.scheme), start};
    }
  };

  if (zeros.size() * ones.size() <= static_cast<std::size_t>(kMaxAlb1Pairs)) {
    Alb1Search alb1 = exact_alb1_small(f);
    WeightScheme unit = WeightScheme::uniform(alb1.witness);
    consider(std::move(alb1.witness), unit, "alb1-witness");
  }
  {
    std::vector<std::pair<InputIndex, InputIndex>> pairs;
    pairs.reserve(zeros.size() * ones.size());
    for (auto x : zeros) {
      for (auto y : ones) pairs.emplace_back(x, y);
    }
    RelationInstance full = RelationInstance::from_table(f, pairs);
    WeightScheme unit = WeightScheme::uniform(full);
    AscentResult result = ascend_scheme(full, unit, cfg);

    // Restart from the uniform scheme on the pairs that dominate the result.
    std::vector<double> lw;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const Rational& w = result.scheme.w()[p];
      lw.push_back(w > 0 ? std::log2(w.get_d()) : -kMaxLog);
    }
    const double top = *std::max_element(lw.begin(), lw.end());
    for (double tau : gap_thresholds(lw, kMaxSnaps)) {
      std::vector<std::pair<InputIndex, InputIndex>> support;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (lw[p] - top >= std::log2(tau)) support.push_back(pairs[p]);
      }
      RelationInstance sub = RelationInstance::from_table(f, support);
      WeightScheme sub_unit = WeightScheme::uniform(sub);
      consider(std::move(sub), sub_unit, "dominant-support");
    }
    if (!best || result.report.value_squared > best->report.value_squared) {
      best = BestBound{std::move(result.report), std::move(full), std::move(result.scheme), "full-uniform"};
    }
  }

  const CertStats stats = cert_stats(f);
  const Rational ceiling(f.n_vars() * stats.c_minus);
  if (best->report.value_squared > ceiling) {
    throw std::logic_error("ascent result exceeds the sqrt(N*C-) ceiling; scheme or evaluator is broken");
  }
  return std::move(*best);
}

}  // namespace qadv
