#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace splinedim {

using Integer = mpz_class;
/// Exact fraction. mpq_class keeps numerator/denominator canonical after
/// every arithmetic operation (denominator > 0, gcd = 1).
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "n" or "n/d" with optional leading sign on n. d must be positive;
/// the fraction need not be reduced on input.
Rational parse_rational(std::string_view text);

/// Canonical text: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

/// Binomial coefficient C(m, 2) truncated to 0 for m < 2.
inline std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

/// dim R_d for R = Q[x, y, z]; 0 for negative d.
inline std::int64_t monomial_count(std::int64_t d) { return d < 0 ? 0 : choose2(d + 2); }

/// Arithmetic in Z/pZ for a prime p < 2^32 (products fit in 64 bits).
struct PrimeField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t from_integer(const Integer& z) const;
  /// Throws std::domain_error when p divides the denominator.
  std::uint64_t from_rational(const Rational& q) const;
  bool divides(const Integer& z) const;
};

}  // namespace splinedim
