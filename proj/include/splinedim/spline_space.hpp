#pragma once

#include <cstdint>
#include <vector>

#include "splinedim/graded_matrix.hpp"
#include "splinedim/mesh.hpp"
#include "splinedim/rank.hpp"

namespace splinedim {

struct SplineProblem {
  const Triangulation& mesh;
  int r;
  int k;
};

struct SplineOptions {
  /// Only selects the primes of the modular rank; answers do not depend on it.
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Unknowns: p_t in R_k per triangle, then q_e in R_(k-r-1) per interior
/// edge. One row block per interior edge: p_plus - p_minus - l^(r+1) q = 0,
/// plus = lower triangle index unless flip[e] is set.
GradedMatrix stacked_system(const SplineProblem& problem, const std::vector<bool>& flip = {});

/// dim C^r_k as the nullity of the stacked system, by the exact rank().
std::int64_t spline_dimension_stacked(const SplineProblem& problem, const RankOptions& opts = {});

/// Conformality map: q_e in R_(k-r-1) per interior edge to R_k per interior
/// vertex, q -> sum over edges at v of +-l_e^(r+1) q_e (+ at the lower
/// endpoint). A spline is a global polynomial plus a kernel element, so
///   dim C^r_k = C(k+2,2) + f1 C(k-r+1,2) - rank.
/// The integer matrix is never formed: per prime, the columns of edges with
/// one interior end are eliminated vertex by vertex, and only the edges with
/// two interior ends are reduced against them and ranked together.
struct ConformalityRank {
  std::size_t rank = 0;
  std::size_t primes = 0;
  /// rank <= sum_v dim J(v)_k; equality means h1 = 0.
  std::size_t upper_bound = 0;
};

std::size_t conformality_rank_mod(const SplineProblem& problem, const PrimeField& field, bool parallel);
ConformalityRank conformality_rank(const SplineProblem& problem, const SplineOptions& opts = {});

std::int64_t spline_dimension(const SplineProblem& problem, const SplineOptions& opts = {});

struct DimensionRow {
  int k;
  std::int64_t dim;
};

/// spline_dimension for k = k_from..k_to, ascending; k values run in parallel.
std::vector<DimensionRow> dimension_table(const Triangulation& mesh, int r, int k_from, int k_to,
                                          const SplineOptions& opts = {});

}  // namespace splinedim
