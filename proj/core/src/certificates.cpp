#include "qadv/certificates.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qadv {

namespace {

using Mask = std::uint32_t;

constexpr std::uint8_t value_bit(Value v) {
  return v == Value::Zero ? 1 : (v == Value::One ? 2 : 0);
}

Mask to_mask(const PositionSet& positions, int n_vars) {
  Mask mask = 0;
  for (int p : positions) {
    if (p < 1 || p > n_vars) throw std::invalid_argument("position outside [1, N]");
    mask |= Mask{1} << (p - 1);
  }
  return mask;
}

PositionSet to_positions(Mask mask) {
  PositionSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::uint64_t> powers_of(int alphabet, int n_vars) {
  std::vector<std::uint64_t> pw(static_cast<std::size_t>(n_vars) + 1, 1);
  for (int i = 1; i <= n_vars; ++i) pw[i] = pw[i - 1] * static_cast<std::uint64_t>(alphabet);
  return pw;
}

// Every input agreeing with `base_index` on the positions in `fixed` must
// have a value in {target, Undefined}.
bool subcube_constant(const FunctionTable& f, InputIndex base_index, Mask fixed, Value target,
                      const std::vector<std::uint64_t>& pw) {
  const int n = f.n_vars();
  const auto k = static_cast<std::uint64_t>(f.alphabet());
  std::vector<int> free_positions;
  InputIndex anchor = 0;
  for (int i = 0; i < n; ++i) {
    if (fixed & (Mask{1} << i)) {
      anchor += (base_index / pw[i]) % k * pw[i];
    } else {
      free_positions.push_back(i);
    }
  }
  std::vector<std::uint64_t> digits(free_positions.size(), 0);
  InputIndex index = anchor;
  while (true) {
    const Value v = f.value(index);
    if (v != target && v != Value::Undefined) return false;
    std::size_t t = 0;
    for (; t < free_positions.size(); ++t) {
      const std::uint64_t step = pw[free_positions[t]];
      if (digits[t] + 1 < k) {
        ++digits[t];
        index += step;
        break;
      }
      index -= digits[t] * step;
      digits[t] = 0;
    }
    if (t == free_positions.size()) return true;
  }
}

// Calls fn(mask) for each size-`size` subset of {0..n-1}, in lexicographic
// order of the sorted position lists. Stops early when fn returns true.
template <typename Fn>
bool for_each_subset_of_size(int n, int size, Fn&& fn) {
  if (size == 0) return fn(Mask{0});
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (fn(m)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

InputIndex checked_index(const FunctionTable& f, std::span<const Symbol> x) {
  if (x.size() != static_cast<std::size_t>(f.n_vars())) {
    throw std::invalid_argument("input word has the wrong length");
  }
  const InputIndex index = encode(x, f.alphabet());
  if (f.value(index) == Value::Undefined) {
    throw std::invalid_argument("f is undefined on this input");
  }
  return index;
}

std::vector<Mask> minimal_certificate_masks(const FunctionTable& f, InputIndex index,
                                            const std::vector<std::uint64_t>& pw) {
  const int n = f.n_vars();
  const Value target = f.value(index);
  std::vector<Mask> minimal;
  for (int size = 0; size <= n; ++size) {
    for_each_subset_of_size(n, size, [&](Mask m) {
      for (Mask kept : minimal) {
        if ((kept & m) == kept) return false;
      }
      if (subcube_constant(f, index, m, target, pw)) minimal.push_back(m);
      return false;
    });
  }
  return minimal;
}

}  // namespace

bool certificate_check(const FunctionTable& f, std::span<const Symbol> x, const PositionSet& positions) {
  const InputIndex index = checked_index(f, x);
  const Mask fixed = to_mask(positions, f.n_vars());
  return subcube_constant(f, index, fixed, f.value(index), powers_of(f.alphabet(), f.n_vars()));
}

MinCertificate min_certificate(const FunctionTable& f, std::span<const Symbol> x) {
  const InputIndex index = checked_index(f, x);
  const auto pw = powers_of(f.alphabet(), f.n_vars());
  const Value target = f.value(index);
  for (int size = 0; size <= f.n_vars(); ++size) {
    Mask found = 0;
    const bool hit = for_each_subset_of_size(f.n_vars(), size, [&](Mask m) {
      if (subcube_constant(f, index, m, target, pw)) {
        found = m;
        return true;
      }
      return false;
    });
    if (hit) return {size, to_positions(found)};
  }
  throw std::logic_error("full position set failed to certify");
}

std::vector<int> certificate_complexities(const FunctionTable& f) {
  const int n = f.n_vars();
  const auto pw = powers_of(f.alphabet(), n);
  const auto k = static_cast<std::uint64_t>(f.alphabet());

  std::vector<InputIndex> defined;
  for (InputIndex i = 0; i < f.size(); ++i) {
    if (f.value(i) != Value::Undefined) defined.push_back(i);
  }
  std::vector<int> result(f.size(), -1);
  std::vector<InputIndex> pending = defined;
  std::vector<std::uint8_t> projection;

  for (int size = 0; size <= n && !pending.empty(); ++size) {
    for_each_subset_of_size(n, size, [&](Mask m) {
      // Project every defined input onto the positions in m and record which
      // values occur in each projected cell.
      std::vector<int> pos = [&] {
        std::vector<int> p;
        for (int i = 0; i < n; ++i) {
          if (m & (Mask{1} << i)) p.push_back(i);
        }
        return p;
      }();
      const std::uint64_t cells = pw[pos.size()];
      projection.assign(cells, 0);
      const auto project = [&](InputIndex index) {
        std::uint64_t cell = 0;
        for (std::size_t t = 0; t < pos.size(); ++t) {
          cell += (index / pw[pos[t]]) % k * pw[t];
        }
        return cell;
      };
      for (InputIndex index : defined) projection[project(index)] |= value_bit(f.value(index));
      std::size_t keep = 0;
      for (InputIndex index : pending) {
        if (projection[project(index)] == value_bit(f.value(index))) {
          result[index] = size;
        } else {
          pending[keep++] = index;
        }
      }
      pending.resize(keep);
      return pending.empty();
    });
  }
  return result;
}

CertStats cert_stats(const FunctionTable& f) {
  const auto complexities = certificate_complexities(f);
  CertStats s;
  for (InputIndex i = 0; i < f.size(); ++i) {
    if (f.value(i) == Value::Zero) s.c0 = std::max(s.c0, complexities[i]);
    if (f.value(i) == Value::One) s.c1 = std::max(s.c1, complexities[i]);
  }
  s.c = std::max(s.c0, s.c1);
  s.c_minus = std::min(s.c0, s.c1);
  return s;
}

std::vector<PositionSet> minimal_certificates(const FunctionTable& f, std::span<const Symbol> x) {
  const InputIndex index = checked_index(f, x);
  auto masks = minimal_certificate_masks(f, index, powers_of(f.alphabet(), f.n_vars()));
  std::vector<PositionSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(to_positions(m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class CiSearch {
 public:
  CiSearch(std::vector<InputIndex> inputs, std::vector<bool> is_one, std::vector<std::vector<Mask>> candidates,
           std::uint64_t node_cap)
      : inputs_(std::move(inputs)), is_one_(std::move(is_one)), candidates_(std::move(candidates)),
        node_cap_(node_cap), chosen_(inputs_.size(), 0) {}

  bool feasible(int threshold) {
    threshold_ = threshold;
    std::vector<std::vector<Mask>> domains = candidates_;
    std::vector<bool> assigned(inputs_.size(), false);
    return search(domains, assigned, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  Mask chosen(std::size_t i) const { return chosen_[i]; }

 private:
  bool search(std::vector<std::vector<Mask>>& domains, std::vector<bool>& assigned, std::size_t depth) {
    if (depth == inputs_.size()) return true;
    // Most constrained unassigned input first; ties by position in the list.
    std::size_t pick = inputs_.size();
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      if (assigned[i]) continue;
      if (pick == inputs_.size() || domains[i].size() < domains[pick].size()) pick = i;
    }
    assigned[pick] = true;
    const std::vector<Mask> options = domains[pick];
    for (Mask choice : options) {
      if (++nodes_ > node_cap_) {
        throw std::length_error("ci_exact search exceeded its node cap");
      }
      // Forward check: prune the opposite side's remaining candidates.
      std::vector<std::pair<std::size_t, std::vector<Mask>>> saved;
      bool wiped = false;
      for (std::size_t j = 0; j < inputs_.size() && !wiped; ++j) {
        if (assigned[j] || is_one_[j] == is_one_[pick]) continue;
        std::vector<Mask> kept;
        for (Mask m : domains[j]) {
          if (std::popcount(m & choice) <= threshold_) kept.push_back(m);
        }
        if (kept.size() != domains[j].size()) {
          saved.emplace_back(j, std::move(domains[j]));
          domains[j] = std::move(kept);
          if (domains[j].empty()) wiped = true;
        }
      }
      if (!wiped) {
        chosen_[pick] = choice;
        if (search(domains, assigned, depth + 1)) return true;
      }
      for (auto& [j, dom] : saved) domains[j] = std::move(dom);
    }
    assigned[pick] = false;
    return false;
  }

  std::vector<InputIndex> inputs_;
  std::vector<bool> is_one_;
  std::vector<std::vector<Mask>> candidates_;
  std::uint64_t node_cap_;
  std::vector<Mask> chosen_;
  int threshold_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CiResult ci_exact(const FunctionTable& f, std::uint64_t node_cap) {
  if (!f.is_total()) throw std::domain_error("ci_exact requires a total function");
  if (f.is_constant()) throw std::domain_error("CI is undefined for a constant function");
  const auto pw = powers_of(f.alphabet(), f.n_vars());

  std::vector<InputIndex> inputs;
  std::vector<bool> is_one;
  std::vector<std::vector<Mask>> candidates;
  for (InputIndex i = 0; i < f.size(); ++i) {
    inputs.push_back(i);
    is_one.push_back(f.value(i) == Value::One);
    candidates.push_back(minimal_certificate_masks(f, i, pw));
  }

  CiSearch search(inputs, is_one, candidates, node_cap);
  for (int threshold = 0; threshold <= f.n_vars(); ++threshold) {
    if (search.feasible(threshold)) {
      CiResult out;
      out.value = threshold;
      out.nodes = search.nodes();
      for (std::size_t i = 0; i < inputs.size(); ++i) out.witness[inputs[i]] = to_positions(search.chosen(i));
      return out;
    }
  }
  throw std::logic_error("no certificate assignment met threshold N");
}

int ci_upper(const FunctionTable& f, const CertificateAssignment& assignment) {
  const auto pw = powers_of(f.alphabet(), f.n_vars());
  std::vector<Mask> zeros, ones;
  for (InputIndex i = 0; i < f.size(); ++i) {
    const Value v = f.value(i);
    if (v == Value::Undefined) continue;
    const auto it = assignment.find(i);
    if (it == assignment.end()) {
      throw std::invalid_argument("assignment is missing input " + std::to_string(i));
    }
    const Mask m = to_mask(it->second, f.n_vars());
    if (!subcube_constant(f, i, m, v, pw)) {
      throw std::invalid_argument("invalid certificate set for input " + std::to_string(i));
    }
    (v == Value::Zero ? zeros : ones).push_back(m);
  }
  for (const auto& [index, set] : assignment) {
    if (index >= f.size() || f.value(index) == Value::Undefined) {
      throw std::invalid_argument("assignment names an undefined input " + std::to_string(index));
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  std::sort(ones.begin(), ones.end());
  ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
  int worst = 0;
  for (Mask a : zeros) {
    for (Mask b : ones) worst = std::max(worst, std::popcount(a & b));
  }
  return worst;
}

CertificateAssignment min_certificate_assignment(const FunctionTable& f) {
  CertificateAssignment out;
  for (InputIndex i = 0; i < f.size(); ++i) {
    if (f.value(i) == Value::Undefined) continue;
    const auto word = decode(i, f.n_vars(), f.alphabet());
    out[i] = min_certificate(f, word).witness;
  }
  return out;
}

bool is_symmetric(const FunctionTable& f) {
  if (f.alphabet() != 2) return false;
  std::vector<int> level(static_cast<std::size_t>(f.n_vars()) + 1, -1);
  for (InputIndex i = 0; i < f.size(); ++i) {
    const int w = std::popcount(i);
    const int v = static_cast<int>(f.value(i));
    if (level[w] == -1) {
      level[w] = v;
    } else if (level[w] != v) {
      return false;
    }
  }
  return true;
}

std::vector<Value> weight_profile(const FunctionTable& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("function is not a symmetric Boolean function");
  std::vector<Value> profile(static_cast<std::size_t>(f.n_vars()) + 1);
  for (int w = 0; w <= f.n_vars(); ++w) {
    profile[w] = f.value((InputIndex{1} << w) - 1);
  }
  return profile;
}

int gamma_from_profile(std::span<const Value> profile) {
  const int n = static_cast<int>(profile.size()) - 1;
  int best = std::numeric_limits<int>::max();
  for (int t = 0; t < n; ++t) {
    if (profile[t] == Value::Undefined || profile[t + 1] == Value::Undefined) {
      throw std::invalid_argument("Gamma needs a total function");
    }
    if (profile[t] != profile[t + 1]) best = std::min(best, std::abs(2 * t - n + 1));
  }
  if (best == std::numeric_limits<int>::max()) {
    throw std::invalid_argument("Gamma is undefined for a constant function");
  }
  return best;
}

int gamma_symmetric(const FunctionTable& f) {
  if (!f.is_total()) throw std::invalid_argument("Gamma needs a total function");
  return gamma_from_profile(weight_profile(f));
}

CertStats symmetric_cert_stats(std::span<const Value> profile) {
  const int n = static_cast<int>(profile.size()) - 1;
  CertStats s;
  for (int w = 0; w <= n; ++w) {
    const Value b = profile[w];
    if (b == Value::Undefined) continue;
    int best = n;
    for (int ones = 0; ones <= w; ++ones) {
      for (int zeros = 0; zeros <= n - w; ++zeros) {
        if (ones + zeros >= best) break;
        bool constant = true;
        for (int t = ones; t <= n - zeros && constant; ++t) {
          constant = profile[t] == b || profile[t] == Value::Undefined;
        }
        if (constant) best = ones + zeros;
      }
    }
    (b == Value::Zero ? s.c0 : s.c1) = std::max(b == Value::Zero ? s.c0 : s.c1, best);
  }
  s.c = std::max(s.c0, s.c1);
  s.c_minus = std::min(s.c0, s.c1);
  return s;
}

std::string assignment_to_json(const CertificateAssignment& assignment) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [index, set] : assignment) doc[std::to_string(index)] = set;
  return doc.dump();
}

CertificateAssignment assignment_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed assignment JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("assignment JSON must be an object");
  CertificateAssignment out;
  for (const auto& [key, value] : doc.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("assignment key is not a decimal index: " + key);
    }
    if (!value.is_array()) throw std::invalid_argument("assignment value must be an array");
    PositionSet set = value.get<PositionSet>();
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out[std::stoull(key)] = std::move(set);
  }
  return out;
}

}  // namespace qadv
