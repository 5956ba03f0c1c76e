#include "splinedim/analytics.hpp"

#include <stdexcept>

namespace splinedim {

Rational theorem_bound(int r) {
  Rational q(22 * r + 7, 10);
  q.canonicalize();
  return q;
}

std::int64_t remark_max_degree(int r) {
  if (r < 0) throw std::invalid_argument("negative smoothness");
  return (9 * static_cast<std::int64_t>(r) + 2) / 4;
}

BoundAnalytics bound_analytics(int r) {
  BoundAnalytics a;
  a.r = r;
  if ((r + 1) % 4 == 0) a.j = (r + 1) / 4;
  a.theorem_bound = theorem_bound(r);
  a.remark_value = remark_max_degree(r);
  return a;
}

Integer hf_difference_quadratic(int j, const Integer& k) {
  if (j < 1) throw std::invalid_argument("j must be positive");
  const Integer J = j;
  return -k * k + (12 * J - 3) * k - 28 * J * J + 18 * J - 2;
}

int compare_radical(const Rational& a, const Rational& b, const Integer& d, const Rational& c) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  // sign(b sqrt(d) - x)
  const Rational x = c - a;
  if (b < 0) return -compare_radical(0, -b, d, -x);
  if (x < 0) return 1;
  const Rational diff = b * b * d - x * x;
  return sgn(diff);
}

RootComparison larger_root_bound(int j) {
  if (j < 1) throw std::invalid_argument("j must be positive");
  RootComparison rc;
  rc.j = j;
  rc.linear_part = Rational(12 * j - 3, 2);
  rc.radical_coefficient = Rational(1, 2);
  rc.discriminant = 32 * Integer(j) * j + 1;
  rc.bound = theorem_bound(4 * j - 1);
  rc.root_exceeds_bound = compare_radical(rc.linear_part, rc.radical_coefficient, rc.discriminant, rc.bound) > 0;
  return rc;
}

bool ConsistencyReport::pass() const {
  for (const auto& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

ConsistencyReport consistency_check(const Triangulation& mesh, int r, const SplineOptions& opts) {
  if (r < 0) throw std::invalid_argument("negative smoothness");
  return consistency_check(r, discrepancy_sweep(mesh, r, 0, 4 * r + 3, opts));
}

ConsistencyReport consistency_check(int r, std::vector<DiscrepancyReport> rows) {
  if (rows.size() != static_cast<std::size_t>(4 * r + 4)) throw std::invalid_argument("expected rows for k = 0..4r+3");
  ConsistencyReport rep;
  rep.r = r;
  rep.rows = std::move(rows);
  rep.max_nonzero = max_nonzero_h1(rep.rows);
  rep.expected_max = remark_max_degree(r);

  Clause a{"max_degree", "largest k with h1 != 0 is floor((9r+2)/4) = " + std::to_string(rep.expected_max), true, {}};
  if (!rep.max_nonzero || *rep.max_nonzero != rep.expected_max) {
    a.pass = false;
    if (rep.max_nonzero) a.offending.push_back(*rep.max_nonzero);
  }

  const Rational limit = theorem_bound(r);
  Clause b{"low_degrees", "h1 != 0 for r+1 <= k <= (22r+7)/10 = " + to_string(limit), true, {}};
  for (const auto& row : rep.rows) {
    if (row.k >= r + 1 && Rational(row.k) <= limit && row.h1 == 0) {
      b.pass = false;
      b.offending.push_back(row.k);
    }
  }

  Clause c{"vanishing", "h1 = 0 for k >= 4r+1", true, {}};
  for (const auto& row : rep.rows) {
    if (row.k >= 4 * r + 1 && row.h1 != 0) {
      c.pass = false;
      c.offending.push_back(row.k);
    }
  }
  rep.clauses = {a, b, c};
  return rep;
}

}  // namespace splinedim
