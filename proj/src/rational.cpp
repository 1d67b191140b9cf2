#include "quasiprob/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace quasiprob {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string decimal_string(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", to_double(q));
  return buf;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Splits an optional leading sign from the body; returns +1/-1.
int strip_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    const int sign = s.front() == '-' ? -1 : +1;
    s.remove_prefix(1);
    return sign;
  }
  return +1;
}

// Base-10 regardless of leading zeros (the GMP string constructor would
// read "0125" as octal).
Integer integer_from_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto result = try_parse_rational(text);
  if (!result) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  return *result;
}

std::optional<Rational> try_parse_rational(std::string_view text) {
  std::string_view body = text;
  const int sign = strip_sign(body);
  const auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  if (!all_digits(num_part)) return std::nullopt;
  Integer num = integer_from_digits(num_part);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = body.substr(slash + 1);
    if (!all_digits(den_part)) return std::nullopt;
    den = integer_from_digits(den_part);
    if (den == 0) return std::nullopt;
  }
  if (sign < 0) num = -num;
  // The two-argument constructor canonicalizes to lowest terms.
  return Rational(num, den);
}

Rational rational_from_decimal(std::string_view text) {
  std::string_view body = text;
  const int sign = strip_sign(body);
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(body)) throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    Rational q{integer_from_digits(body), 1};
    return sign < 0 ? Rational(-q) : q;
  }
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  if (!int_part.empty() && !all_digits(int_part))
    throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  if (!frac_part.empty() && !all_digits(frac_part))
    throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");

  Integer digits = integer_from_digits(std::string(int_part) + std::string(frac_part));
  Integer den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  Rational q(digits, den);
  return sign < 0 ? Rational(-q) : q;
}

}  // namespace quasiprob
