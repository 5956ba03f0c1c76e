#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splinedim/mesh.hpp"
#include "splinedim/spline_space.hpp"

namespace splinedim {

/// Graded dimensions of R/J in degree k:
///   0 -> (+)_t R -> (+)_e R/l_e^(r+1) -> (+)_v R/J(v) -> 0.
struct ChiReport {
  int r = 0;
  int k = 0;
  std::int64_t triangles = 0;
  std::int64_t edges = 0;
  std::int64_t vertices = 0;
  std::int64_t chi = 0;
};

ChiReport euler_characteristic(const Triangulation& mesh, int r, int k);

struct DiscrepancyReport {
  int r = 0;
  int k = 0;
  std::int64_t dim = 0;
  std::int64_t bound = 0;
  std::int64_t chi = 0;
  std::int64_t h1 = 0;   // dim - chi
  std::int64_t gap = 0;  // dim - bound
  /// Generators of H_1(R/J): one per totally interior edge.
  std::size_t h1_generators = 0;
};

DiscrepancyReport discrepancy(const Triangulation& mesh, int r, int k, const SplineOptions& opts = {});
/// Reports for k_from..k_to in ascending k; the k values run in parallel.
std::vector<DiscrepancyReport> discrepancy_sweep(const Triangulation& mesh, int r, int k_from, int k_to,
                                                 const SplineOptions& opts = {});

/// Largest k in [0, 4r+1] with h1(k) != 0.
std::optional<int> max_nonzero_h1(const Triangulation& mesh, int r, const SplineOptions& opts = {});
std::optional<int> max_nonzero_h1(const std::vector<DiscrepancyReport>& rows);

}  // namespace splinedim
