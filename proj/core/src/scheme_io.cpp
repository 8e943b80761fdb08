#include "qadv/adversary.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qadv {

namespace {

using nlohmann::json;

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed integer string: " + s);
    }
    return mpz_class(s);
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

Rational rational_from_pair(const json& num, const json& den) {
  const mpz_class d = integer_from_json(den);
  if (d == 0) throw std::invalid_argument("zero denominator in scheme entry");
  Rational q(integer_from_json(num), d);
  q.canonicalize();
  return q;
}

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

InputIndex require_index(const std::optional<InputIndex>& index) {
  if (!index) throw std::invalid_argument("relation inputs have no 64-bit index; cannot serialize");
  return *index;
}

}  // namespace

std::string relation_to_json(const RelationInstance& rel) {
  json doc;
  doc["n"] = rel.n_vars();
  doc["k"] = rel.alphabet();
  doc["x"] = json::array();
  doc["y"] = json::array();
  doc["r"] = json::array();
  for (std::size_t i = 0; i < rel.x_count(); ++i) doc["x"].push_back(require_index(rel.x_index(i)));
  for (std::size_t j = 0; j < rel.y_count(); ++j) doc["y"].push_back(require_index(rel.y_index(j)));
  for (const auto& p : rel.pairs()) {
    doc["r"].push_back({require_index(rel.x_index(p.x)), require_index(rel.y_index(p.y))});
  }
  return doc.dump();
}

RelationInstance relation_from_json(const FunctionTable& f, std::string_view text) {
  const json doc = parse_document(text, "relation");
  if (!doc.is_object() || !doc.contains("x") || !doc.contains("y") || !doc.contains("r")) {
    throw std::invalid_argument("relation JSON needs x, y and r");
  }
  std::vector<InputIndex> xs, ys;
  std::vector<std::pair<InputIndex, InputIndex>> pairs;
  try {
    xs = doc["x"].get<std::vector<InputIndex>>();
    ys = doc["y"].get<std::vector<InputIndex>>();
    for (const auto& pr : doc["r"]) {
      if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("relation pair must be [x,y]");
      pairs.emplace_back(pr[0].get<InputIndex>(), pr[1].get<InputIndex>());
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed relation JSON: ") + e.what());
  }
  // Accept either orientation; X is normalized to the 0-side.
  const bool swap = !xs.empty() && xs.front() < f.size() && f.value(xs.front()) == Value::One;
  return RelationInstance::from_table_sets(f, xs, ys, pairs, swap);
}

RelationInstance relation_from_json(std::string_view text) {
  const json doc = parse_document(text, "relation");
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("k")) {
    throw std::invalid_argument("relation JSON without a table needs n and k");
  }
  int n = 0, k = 0;
  std::vector<InputIndex> xs, ys;
  std::vector<RelationInstance::Pair> pairs;
  try {
    n = doc["n"].get<int>();
    k = doc["k"].get<int>();
    table_size(n, k);
    xs = doc.at("x").get<std::vector<InputIndex>>();
    ys = doc.at("y").get<std::vector<InputIndex>>();
    const auto local = [](const std::vector<InputIndex>& list, InputIndex v) {
      const auto it = std::find(list.begin(), list.end(), v);
      if (it == list.end()) throw std::invalid_argument("relation pair names an input outside x or y");
      return static_cast<std::uint32_t>(it - list.begin());
    };
    for (const auto& pr : doc.at("r")) {
      if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("relation pair must be [x,y]");
      pairs.push_back({local(xs, pr[0].get<InputIndex>()), local(ys, pr[1].get<InputIndex>())});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed relation JSON: ") + e.what());
  }
  const auto words = [&](const std::vector<InputIndex>& list) {
    std::vector<InputWord> out;
    for (InputIndex i : list) {
      if (i >= table_size(n, k)) throw std::invalid_argument("relation input index out of range");
      out.push_back(decode(i, n, k));
    }
    return out;
  };
  for (const auto* list : {&xs, &ys}) {
    auto sorted = *list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("relation lists an input twice");
    }
  }
  return RelationInstance::from_words(n, k, words(xs), words(ys), std::move(pairs));
}

std::string scheme_to_json(const RelationInstance& rel, const WeightScheme& s) {
  s.check_domain(rel);
  json doc;
  doc["w"] = json::array();
  doc["u"] = json::array();
  doc["v"] = json::array();
  const bool radical = s.has_radical();
  const auto pairs = rel.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto x = require_index(rel.x_index(pairs[p].x));
    const auto y = require_index(rel.y_index(pairs[p].y));
    const Rational& w = s.w()[p];
    doc["w"].push_back({x, y, integer_json(w.get_num()), integer_json(w.get_den())});
    const std::size_t base = rel.slot_offset(p);
    const auto diff = rel.diff(p);
    for (std::size_t t = 0; t < diff.size(); ++t) {
      Rational u = s.u()[base + t];
      Rational v = s.v()[base + t];
      if (radical) {
        u = u * u * s.radicand();
        v = v * v * s.radicand();
      }
      doc["u"].push_back({x, y, diff[t] + 1, integer_json(u.get_num()), integer_json(u.get_den())});
      doc["v"].push_back({x, y, diff[t] + 1, integer_json(v.get_num()), integer_json(v.get_den())});
    }
  }
  if (radical) {
    doc["sqrt_lmax_factor"] = true;
    if (s.radicand().get_den() != 1) throw std::invalid_argument("radicand must be an integer to serialize");
    doc["lmax"] = integer_json(s.radicand().get_num());
  }
  return doc.dump();
}

WeightScheme scheme_from_json(const RelationInstance& rel, std::string_view text) {
  const json doc = parse_document(text, "scheme");
  if (!doc.is_object() || !doc.contains("w") || !doc.contains("u") || !doc.contains("v")) {
    throw std::invalid_argument("scheme JSON needs w, u and v");
  }
  const bool radical = doc.value("sqrt_lmax_factor", false);
  Rational radicand(1);
  if (radical) {
    if (!doc.contains("lmax")) throw std::invalid_argument("radical scheme needs lmax");
    radicand = Rational(integer_from_json(doc["lmax"]));
    if (radicand <= 0) throw std::invalid_argument("lmax must be positive");
  }

  const auto locate_pair = [&](const json& entry) -> std::size_t {
    const auto x = rel.find_x(entry.at(0).get<InputIndex>());
    const auto y = rel.find_y(entry.at(1).get<InputIndex>());
    if (!x || !y) throw std::invalid_argument("scheme entry names an input outside the relation");
    const auto p = rel.find_pair(static_cast<std::uint32_t>(*x), static_cast<std::uint32_t>(*y));
    if (!p) throw std::invalid_argument("scheme entry names a pair outside the relation");
    return *p;
  };

  std::vector<Rational> w(rel.pair_count());
  std::vector<Rational> u(rel.slot_count()), v(rel.slot_count());
  std::vector<bool> seen_w(rel.pair_count(), false), seen_u(rel.slot_count(), false),
      seen_v(rel.slot_count(), false);

  try {
    for (const auto& entry : doc["w"]) {
      if (!entry.is_array() || entry.size() != 4) throw std::invalid_argument("w entry must be [x,y,num,den]");
      const std::size_t p = locate_pair(entry);
      if (seen_w[p]) throw std::invalid_argument("duplicate w entry");
      seen_w[p] = true;
      w[p] = rational_from_pair(entry[2], entry[3]);
    }
    const auto read_slots = [&](const json& list, std::vector<Rational>& out, std::vector<bool>& seen) {
      for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 5) throw std::invalid_argument("u/v entry must be [x,y,i,num,den]");
        const std::size_t p = locate_pair(entry);
        const int position = entry[2].get<int>() - 1;
        const auto diff = rel.diff(p);
        const auto it = std::find(diff.begin(), diff.end(), position);
        if (position < 0 || it == diff.end()) {
          throw std::invalid_argument("u/v entry at a position where the pair agrees");
        }
        const std::size_t slot = rel.slot_offset(p) + static_cast<std::size_t>(it - diff.begin());
        if (seen[slot]) throw std::invalid_argument("duplicate u/v entry");
        seen[slot] = true;
        Rational value = rational_from_pair(entry[3], entry[4]);
        if (radical) {
          Rational root;
          if (!exact_sqrt(value / radicand, root)) {
            throw std::invalid_argument("radical scheme entry is not lmax times a rational square");
          }
          value = root;
        }
        out[slot] = std::move(value);
      }
    };
    read_slots(doc["u"], u, seen_u);
    read_slots(doc["v"], v, seen_v);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scheme JSON: ") + e.what());
  }

  const auto all = [](const std::vector<bool>& flags) {
    return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
  };
  if (!all(seen_w) || !all(seen_u) || !all(seen_v)) {
    throw std::invalid_argument("scheme does not cover the relation's domain");
  }
  return WeightScheme(std::move(w), std::move(u), std::move(v), std::move(radicand));
}

}  // namespace qadv
