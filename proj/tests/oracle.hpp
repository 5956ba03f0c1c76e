#pragma once

// Reference computations for tests. Nothing here calls the library's rank,
// polynomial or graded-matrix code.

#include <cstdint>
#include <vector>

#include "splinedim/mesh.hpp"

namespace oracle {

using splinedim::Rational;

/// Rank by plain rational Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// dim C^r_k from the smoothness conditions themselves: one affine
/// polynomial of degree <= k per triangle; across each interior edge the
/// normal derivatives of order 0..r of the difference vanish at k+1 points
/// of the edge's line.
std::int64_t spline_dimension(const splinedim::Triangulation& mesh, int r, int k);

/// dim C^0_k = V + (k-1)E + C(k-1,2)F for k >= 1.
std::int64_t lagrange_dimension(const splinedim::Triangulation& mesh, int k);

}  // namespace oracle
