#pragma once

#include <cstdint>

#include "splinedim/mesh.hpp"

namespace splinedim {

struct BoundReport {
  int r = 0;
  int k = 0;
  std::size_t f0 = 0;
  std::size_t f1 = 0;
  std::int64_t sigma_total = 0;
  std::int64_t value = 0;
};

/// P(r,k) = C(k+2,2) + C(k-r+1,2) f1 - max(C(k+2,2) - C(r+2,2), 0) f0 + sigma,
/// with sigma_i summed over 1 <= j <= k-r. Below degree r+1 no vertex
/// condition exists yet, so neither correction applies there.
BoundReport schumaker_bound(const Triangulation& mesh, int r, int k);

}  // namespace splinedim
