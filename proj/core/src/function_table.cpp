#include "qadv/function_table.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qadv {

char to_char(Value v) {
  switch (v) {
    case Value::Zero: return '0';
    case Value::One: return '1';
    case Value::Undefined: return '*';
  }
  return '?';
}

Value opposite(Value v) {
  switch (v) {
    case Value::Zero: return Value::One;
    case Value::One: return Value::Zero;
    default: return Value::Undefined;
  }
}

std::uint64_t table_size(int n_vars, int alphabet) {
  if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
  if (alphabet < 2 || alphabet > 255) throw std::invalid_argument("alphabet size must be in [2, 255]");
  std::uint64_t size = 1;
  for (int i = 0; i < n_vars; ++i) {
    size *= static_cast<std::uint64_t>(alphabet);
    if (size > kMaxTableEntries) {
      throw std::length_error("table of k^N entries exceeds the 2^24 cap");
    }
  }
  return size;
}

InputIndex encode(std::span<const Symbol> word, int alphabet) {
  InputIndex index = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] >= alphabet) throw std::out_of_range("symbol outside the alphabet");
    index = index * static_cast<InputIndex>(alphabet) + word[i];
  }
  return index;
}

InputWord decode(InputIndex index, int n_vars, int alphabet) {
  InputWord word(static_cast<std::size_t>(n_vars));
  for (int i = 0; i < n_vars; ++i) {
    word[i] = static_cast<Symbol>(index % static_cast<InputIndex>(alphabet));
    index /= static_cast<InputIndex>(alphabet);
  }
  return word;
}

FunctionTable::FunctionTable(int n_vars, int alphabet, std::vector<Value> values)
    : n_vars_(n_vars), alphabet_(alphabet), values_(std::move(values)) {
  if (values_.size() != table_size(n_vars, alphabet)) {
    throw std::invalid_argument("value count must equal k^N");
  }
  for (Value v : values_) {
    switch (v) {
      case Value::Zero: ++zero_count_; break;
      case Value::One: ++one_count_; break;
      case Value::Undefined: ++undefined_count_; break;
      default: throw std::invalid_argument("bad table value");
    }
  }
}

FunctionTable FunctionTable::from_symbols(int n_vars, int alphabet, std::string_view symbols) {
  const std::uint64_t size = table_size(n_vars, alphabet);
  if (symbols.size() != size) {
    throw std::invalid_argument("value string has " + std::to_string(symbols.size()) +
                                " symbols, expected k^N = " + std::to_string(size));
  }
  std::vector<Value> values;
  values.reserve(size);
  for (char c : symbols) {
    switch (c) {
      case '0': values.push_back(Value::Zero); break;
      case '1': values.push_back(Value::One); break;
      case '*': values.push_back(Value::Undefined); break;
      default: throw std::invalid_argument(std::string("symbol outside {0,1,*}: '") + c + "'");
    }
  }
  return FunctionTable(n_vars, alphabet, std::move(values));
}

Value FunctionTable::eval(std::span<const Symbol> word) const {
  if (word.size() != static_cast<std::size_t>(n_vars_)) {
    throw std::invalid_argument("input word has the wrong length");
  }
  return values_[encode(word, alphabet_)];
}

std::uint64_t FunctionTable::count(Value v) const {
  switch (v) {
    case Value::Zero: return zero_count_;
    case Value::One: return one_count_;
    default: return undefined_count_;
  }
}

std::vector<InputIndex> FunctionTable::indices_with(Value v) const {
  std::vector<InputIndex> out;
  out.reserve(count(v));
  for (InputIndex i = 0; i < values_.size(); ++i) {
    if (values_[i] == v) out.push_back(i);
  }
  return out;
}

FunctionTable FunctionTable::complement() const {
  std::vector<Value> flipped(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) flipped[i] = opposite(values_[i]);
  return FunctionTable(n_vars_, alphabet_, std::move(flipped));
}

std::string FunctionTable::symbols() const {
  std::string s;
  s.reserve(values_.size());
  for (Value v : values_) s.push_back(to_char(v));
  return s;
}

namespace {

int parse_header_int(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0 || token.size() == prefix.size()) {
    throw std::invalid_argument("malformed header: expected " + prefix + "<int>");
  }
  const std::string digits = token.substr(prefix.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed header value: " + token);
  }
  if (digits.size() > 6) throw std::invalid_argument("header value too large: " + token);
  return std::stoi(digits);
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

FunctionTable parse_tt(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("malformed header: empty document");
  header = strip_cr(header);
  std::istringstream hs(header);
  std::string n_token, k_token, extra;
  if (!(hs >> n_token >> k_token) || (hs >> extra)) {
    throw std::invalid_argument("malformed header: expected 'n=<N> k=<k>'");
  }
  const int n = parse_header_int(n_token, "n");
  const int k = parse_header_int(k_token, "k");
  std::string values;
  if (!std::getline(in, values)) throw std::invalid_argument("missing value line");
  values = strip_cr(values);
  std::string rest;
  while (std::getline(in, rest)) {
    if (!strip_cr(rest).empty()) throw std::invalid_argument("trailing content after value line");
  }
  return FunctionTable::from_symbols(n, k, values);
}

FunctionTable parse_table_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") || !doc.contains("values") ||
      !doc["n"].is_number_integer() || !doc["k"].is_number_integer() || !doc["values"].is_string()) {
    throw std::invalid_argument("malformed table JSON: need integer n, k and string values");
  }
  return FunctionTable::from_symbols(doc["n"].get<int>(), doc["k"].get<int>(),
                                     doc["values"].get<std::string>());
}

FunctionTable load_table(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_table_json(text) : parse_tt(text);
  }
  throw std::invalid_argument("malformed header: empty document");
}

FunctionTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str());
}

std::string to_tt(const FunctionTable& f) {
  return "n=" + std::to_string(f.n_vars()) + " k=" + std::to_string(f.alphabet()) + "\n" +
         f.symbols() + "\n";
}

std::string to_table_json(const FunctionTable& f) {
  nlohmann::json doc;
  doc["n"] = f.n_vars();
  doc["k"] = f.alphabet();
  doc["values"] = f.symbols();
  return doc.dump();
}

}  // namespace qadv
