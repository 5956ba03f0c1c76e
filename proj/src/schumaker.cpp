#include "splinedim/schumaker.hpp"

#include <algorithm>
#include <stdexcept>

#include "splinedim/local_vertex.hpp"

namespace splinedim {

BoundReport schumaker_bound(const Triangulation& mesh, int r, int k) {
  if (r < 0 || k < 0) throw std::invalid_argument("r and k must be nonnegative");
  BoundReport b;
  b.r = r;
  b.k = k;
  b.f0 = mesh.f0();
  b.f1 = mesh.f1();
  for (VertexId v : mesh.interior_vertices()) b.sigma_total += sigma(static_cast<int>(slope_count(mesh, v)), r, k);
  const auto f0 = static_cast<std::int64_t>(b.f0);
  const auto f1 = static_cast<std::int64_t>(b.f1);
  const std::int64_t vertex_coeff = std::max<std::int64_t>(monomial_count(k) - monomial_count(r), 0);
  b.value = monomial_count(k) + choose2(k - r + 1) * f1 - vertex_coeff * f0 + b.sigma_total;
  return b;
}

}  // namespace splinedim
