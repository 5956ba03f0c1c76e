#include "splinedim/chain_complex.hpp"

#include <stdexcept>

#include "splinedim/local_vertex.hpp"
#include "splinedim/schumaker.hpp"

namespace splinedim {

ChiReport euler_characteristic(const Triangulation& mesh, int r, int k) {
  if (r < 0 || k < 0) throw std::invalid_argument("r and k must be nonnegative");
  ChiReport c;
  c.r = r;
  c.k = k;
  const std::int64_t full = monomial_count(k);
  c.triangles = static_cast<std::int64_t>(mesh.face_count()) * full;
  c.edges = static_cast<std::int64_t>(mesh.f1()) * (full - monomial_count(k - r - 1));
  for (VertexId v : mesh.interior_vertices()) c.vertices += local_hilbert(make_vertex_ideal(mesh, v, r), k);
  c.chi = c.triangles - c.edges + c.vertices;
  return c;
}

DiscrepancyReport discrepancy(const Triangulation& mesh, int r, int k, const SplineOptions& opts) {
  DiscrepancyReport d;
  d.r = r;
  d.k = k;
  d.dim = spline_dimension({mesh, r, k}, opts);
  d.bound = schumaker_bound(mesh, r, k).value;
  d.chi = euler_characteristic(mesh, r, k).chi;
  d.h1 = d.dim - d.chi;
  d.gap = d.dim - d.bound;
  d.h1_generators = totally_interior_edges(mesh).size();
  return d;
}

std::vector<DiscrepancyReport> discrepancy_sweep(const Triangulation& mesh, int r, int k_from, int k_to,
                                                 const SplineOptions& opts) {
  if (k_from > k_to) throw std::invalid_argument("empty degree range");
  if (k_from < 0) throw std::invalid_argument("negative degree");
  std::vector<DiscrepancyReport> rows(static_cast<std::size_t>(k_to - k_from + 1));
  const auto n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (long long i = n - 1; i >= 0; --i) {
    rows[static_cast<std::size_t>(i)] = discrepancy(mesh, r, k_from + static_cast<int>(i), opts);
  }
  return rows;
}

std::optional<int> max_nonzero_h1(const std::vector<DiscrepancyReport>& rows) {
  std::optional<int> best;
  for (const auto& row : rows) {
    if (row.h1 != 0 && (!best || row.k > *best)) best = row.k;
  }
  return best;
}

std::optional<int> max_nonzero_h1(const Triangulation& mesh, int r, const SplineOptions& opts) {
  if (r < 0) throw std::invalid_argument("negative smoothness");
  return max_nonzero_h1(discrepancy_sweep(mesh, r, 0, 4 * r + 1, opts));
}

}  // namespace splinedim
