#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splinedim/chain_complex.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

/// (22r + 7) / 10.
Rational theorem_bound(int r);
/// floor((9r + 2) / 4).
std::int64_t remark_max_degree(int r);

struct BoundAnalytics {
  int r = 0;
  std::optional<int> j;  // (r+1)/4 when 4 divides r+1
  Rational theorem_bound;
  std::int64_t remark_value = 0;
};

BoundAnalytics bound_analytics(int r);

/// -k^2 + (12j - 3)k - 28j^2 + 18j - 2.
Integer hf_difference_quadratic(int j, const Integer& k);

/// Sign of a + b sqrt(d) - c, exactly. d >= 0.
int compare_radical(const Rational& a, const Rational& b, const Integer& d, const Rational& c);

/// The larger root 6j - 3/2 + sqrt(32j^2 + 1)/2 of the quadratic against
/// theorem_bound(4j - 1) = (88j - 15)/10.
struct RootComparison {
  int j = 0;
  Rational linear_part;  // 6j - 3/2
  Rational radical_coefficient;  // 1/2
  Integer discriminant;  // 32j^2 + 1
  Rational bound;
  bool root_exceeds_bound = false;
};

RootComparison larger_root_bound(int j);

struct Clause {
  std::string name;
  std::string statement;
  bool pass = true;
  std::vector<int> offending;
};

struct ConsistencyReport {
  int r = 0;
  std::optional<int> max_nonzero;
  std::int64_t expected_max = 0;
  std::vector<DiscrepancyReport> rows;  // k = 0..4r+3
  std::vector<Clause> clauses;

  bool pass() const;
};

/// (a) max_nonzero_h1 = floor((9r+2)/4); (b) h1 != 0 for r+1 <= k <= (22r+7)/10;
/// (c) h1 = 0 for 4r+1 <= k <= 4r+3.
ConsistencyReport consistency_check(const Triangulation& mesh, int r, const SplineOptions& opts = {});
/// Same clauses on an existing sweep over k = 0..4r+3.
ConsistencyReport consistency_check(int r, std::vector<DiscrepancyReport> rows);

}  // namespace splinedim
