#pragma once

#include <cstdint>
#include <vector>

#include "splinedim/mesh.hpp"
#include "splinedim/rank.hpp"

namespace splinedim {

/// J(v): the ideal generated by l^(r+1), one l per distinct slope at v.
struct VertexIdeal {
  VertexId vertex = 0;
  Point2 point;
  int r = 0;
  std::vector<LinearForm> generators;

  int exponent() const { return r + 1; }
};

VertexIdeal make_vertex_ideal(const Triangulation& mesh, VertexId v, int r);
/// Ideal of arbitrary pairwise non-proportional forms through one point.
VertexIdeal make_vertex_ideal(const Point2& point, std::vector<LinearForm> forms, int r);

/// Every form through the point p = (a, b) becomes a binary form after the
/// translation x = x' + a z, y = y' + b z. J(v) is then extended from an
/// ideal I' of Q[x', y'], so R/J(v) = (Q[x', y'] / I')[z] and
///   HF(R/J(v), k) = sum_{d <= k} (d + 1 - dim I'_d).
/// Returns dim I'_d for d = 0..max_degree.
std::vector<std::int64_t> binary_ideal_dims(const VertexIdeal& vi, int max_degree, const RankOptions& opts = {});

/// dim (R/J(v))_k.
std::int64_t local_hilbert(const VertexIdeal& vi, int k, const RankOptions& opts = {});
/// HF(R/J(v), k) for k = 0..max_degree.
std::vector<std::int64_t> local_hilbert_series(const VertexIdeal& vi, int max_degree, const RankOptions& opts = {});
/// Same number from the rank of the 3-variable matrix of all degree-k
/// multiples of the generators. Slow; kept as a cross-check.
std::int64_t local_hilbert_direct(const VertexIdeal& vi, int k, const RankOptions& opts = {});

struct SyzygyProfile {
  VertexId vertex = 0;
  /// Coefficient degrees (total degree minus r+1), ascending.
  std::vector<int> degrees;
};

/// Minimal first-syzygy coefficient degrees of J(v). The syzygy module of
/// binary forms is free, so the degrees follow from the Hilbert function:
/// new generators in degree d = dim Syz_d minus what the lower ones span.
SyzygyProfile syzygy_degrees(const VertexIdeal& vi, const RankOptions& opts = {});

/// Schumaker's per-vertex term sum_{j >= 1} max(r + 1 + j(1 - n), 0).
std::int64_t sigma(int n, int r);
/// Same sum with j restricted to 1..k-r.
std::int64_t sigma(int n, int r, int k);

}  // namespace splinedim
