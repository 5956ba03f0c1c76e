#include "splinedim/polynomial.hpp"

#include <stdexcept>

namespace splinedim {

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  monomials_.reserve(static_cast<std::size_t>(monomial_count(degree)));
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j) monomials_.push_back({i, j, degree - i - j});
  }
}

Form::Form(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(monomial_count(degree))) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

Form::Form(int degree, std::vector<Rational> coefficients) : degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(monomial_count(degree))) {
    throw std::invalid_argument("coefficient count does not match degree");
  }
}

Form Form::from_linear(const LinearForm& l) { return Form(1, {l.a, l.b, l.c}); }

const Rational& Form::coefficient(const Monomial& m) const {
  return coeffs_.at(MonomialBasis::index(degree_, m[0], m[1]));
}

Rational& Form::coefficient(const Monomial& m) { return coeffs_.at(MonomialBasis::index(degree_, m[0], m[1])); }

bool Form::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Rational Form::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
  Rational sum = 0;
  const MonomialBasis basis(degree_);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (coeffs_[n] == 0) continue;
    Rational term = coeffs_[n];
    const auto& m = basis[n];
    for (int t = 0; t < m[0]; ++t) term *= x;
    for (int t = 0; t < m[1]; ++t) term *= y;
    for (int t = 0; t < m[2]; ++t) term *= z;
    sum += term;
  }
  return sum;
}

Form operator*(const Form& f, const Form& g) {
  const MonomialBasis bf(f.degree_);
  const MonomialBasis bg(g.degree_);
  const int d = f.degree_ + g.degree_;
  Form out(d);
  for (std::size_t s = 0; s < bf.size(); ++s) {
    if (f.coeffs_[s] == 0) continue;
    for (std::size_t t = 0; t < bg.size(); ++t) {
      if (g.coeffs_[t] == 0) continue;
      const int i = bf[s][0] + bg[t][0];
      const int j = bf[s][1] + bg[t][1];
      out.coeffs_[MonomialBasis::index(d, i, j)] += f.coeffs_[s] * g.coeffs_[t];
    }
  }
  return out;
}

Form power(const LinearForm& l, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (l.a == 0 && l.b == 0 && l.c == 0) throw std::invalid_argument("power of the zero form");
  // a^i b^j c^k * e! / (i! j! k!)
  Form out(e);
  const MonomialBasis basis(e);
  std::vector<Integer> factorial(static_cast<std::size_t>(e) + 1, 1);
  for (int n = 1; n <= e; ++n) factorial[n] = factorial[n - 1] * n;
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const auto& m = basis[n];
    Rational c(factorial[e] / (factorial[m[0]] * factorial[m[1]] * factorial[m[2]]));
    for (int t = 0; t < m[0]; ++t) c *= l.a;
    for (int t = 0; t < m[1]; ++t) c *= l.b;
    for (int t = 0; t < m[2]; ++t) c *= l.c;
    out.coefficient(m) = c;
  }
  return out;
}

}  // namespace splinedim
