#include "nsmm/rational.hpp"

#include <cctype>

namespace nsmm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  Rational q{Integer(std::string(num)), Integer(std::string(den))};
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational binomial(const Rational& r, int j) {
  Rational out = 1;
  for (int i = 0; i < j; ++i) {
    out *= (r - i);
    out /= (i + 1);
  }
  return out;
}

Rational pow(const Rational& q, int e) {
  Rational base = e < 0 ? Rational(1 / q) : q;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Rational out = 1;
  while (n) {
    if (n & 1u) out *= base;
    base *= base;
    n >>= 1u;
  }
  return out;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace nsmm
