#include "sbt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sbt {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal: '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    BigInt num = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (r == 0) throw std::domain_error("rational_pow: negative power of zero");
    return rational_pow(Rational(1) / r, -e);
  }
  Rational base = r, acc = 1;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace sbt
