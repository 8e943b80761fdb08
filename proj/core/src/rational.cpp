#include "qadv/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace qadv {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  const auto check_digits = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + s);
    for (std::size_t i = 0; i < part.size(); ++i) {
      const char c = part[i];
      if (c == '-' && allow_sign && i == 0 && part.size() > 1) continue;
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: " + s);
    }
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
  return Rational(d);
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace qadv
