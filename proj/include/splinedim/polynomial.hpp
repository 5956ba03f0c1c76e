#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "splinedim/mesh.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

/// Exponent triple (i, j, l) of x^i y^j z^l.
using Monomial = std::array<int, 3>;

/// Degree-d monomials of Q[x, y, z] in graded lexicographic order
/// (x > y > z): x^d, x^(d-1) y, x^(d-1) z, x^(d-2) y^2, ..., z^d.
class MonomialBasis {
 public:
  explicit MonomialBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Position of x^i y^j z^(d-i-j) in the degree-d order.
  static std::size_t index(int degree, int i, int j) {
    const auto head = static_cast<std::size_t>(degree - i);
    return head * (head + 1) / 2 + static_cast<std::size_t>(degree - i - j);
  }
  std::size_t index_of(const Monomial& m) const { return index(degree_, m[0], m[1]); }

 private:
  int degree_;
  std::vector<Monomial> monomials_;
};

/// Homogeneous polynomial with dense coefficients in the MonomialBasis order.
class Form {
 public:
  explicit Form(int degree);
  Form(int degree, std::vector<Rational> coefficients);
  static Form from_linear(const LinearForm& l);

  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(const Monomial& m) const;
  Rational& coefficient(const Monomial& m);
  bool is_zero() const;

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;

  friend Form operator*(const Form& f, const Form& g);
  friend bool operator==(const Form&, const Form&) = default;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Multinomial expansion of l^e.
Form power(const LinearForm& l, int e);

}  // namespace splinedim
