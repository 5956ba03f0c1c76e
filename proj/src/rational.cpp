#include "splinedim/rational.hpp"

#include <cctype>

namespace splinedim {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  q.get_num() = integer_from(num);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
    return q;
  }
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  q.get_den() = integer_from(den);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return pow(a, p - 2);
}

std::uint64_t PrimeField::from_integer(const Integer& z) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t PrimeField::from_rational(const Rational& q) const {
  const std::uint64_t den = from_integer(q.get_den());
  if (den == 0) throw std::domain_error("prime divides a denominator");
  return mul(from_integer(q.get_num()), inv(den));
}

bool PrimeField::divides(const Integer& z) const { return from_integer(z) == 0; }

}  // namespace splinedim
