#include "splinedim/spline_space.hpp"

#include <stdexcept>

#include "splinedim/local_vertex.hpp"
#include "splinedim/polynomial.hpp"

namespace splinedim {

namespace {

void check(const SplineProblem& p) {
  if (p.r < 0 || p.k < 0) throw std::invalid_argument("r and k must be nonnegative");
}

// l_e^(r+1) for every edge, as integer coefficients in the degree r+1 basis.
std::vector<std::vector<Integer>> edge_powers(const Triangulation& mesh, int e) {
  std::vector<std::vector<Integer>> out;
  for (EdgeId id = 0; id < mesh.edges().size(); ++id) {
    const Form f = power(edge_form(mesh, id), e);
    std::vector<Integer> c;
    for (const auto& q : f.coefficients()) c.push_back(q.get_num());
    out.push_back(std::move(c));
  }
  return out;
}

// Writes sign * l^(r+1) * m into row `dst` (length C(k+2,2)) mod p.
void write_product(std::uint64_t* dst, const std::vector<std::uint64_t>& pow_mod, const MonomialBasis& pow_basis,
                   const Monomial& m, int k, bool negate, const PrimeField& f) {
  for (std::size_t t = 0; t < pow_basis.size(); ++t) {
    if (pow_mod[t] == 0) continue;
    const auto idx = MonomialBasis::index(k, pow_basis[t][0] + m[0], pow_basis[t][1] + m[1]);
    dst[idx] = negate ? f.neg(pow_mod[t]) : pow_mod[t];
  }
}

}  // namespace

GradedMatrix stacked_system(const SplineProblem& problem, const std::vector<bool>& flip) {
  check(problem);
  const auto& mesh = problem.mesh;
  const int k = problem.k;
  const int qdeg = k - problem.r - 1;
  std::vector<GradedMatrix::BlockSpec> rows;
  std::vector<GradedMatrix::BlockSpec> cols;
  for (TriangleId t = 0; t < mesh.face_count(); ++t) cols.push_back({"t" + std::to_string(t), k});
  for (EdgeId e : mesh.interior_edges()) {
    rows.push_back({"e" + std::to_string(e), k});
    if (qdeg >= 0) cols.push_back({"q" + std::to_string(e), qdeg});
  }
  GradedMatrix m(rows, cols);
  for (std::size_t i = 0; i < mesh.interior_edges().size(); ++i) {
    const EdgeId e = mesh.interior_edges()[i];
    const auto& tris = mesh.edges()[e].triangles;
    const bool flipped = i < flip.size() && flip[i];
    m.add_identity(i, tris[flipped ? 1 : 0], 1);
    m.add_identity(i, tris[flipped ? 0 : 1], -1);
    if (qdeg >= 0) m.add_multiplication(i, mesh.face_count() + i, power(edge_form(mesh, e), problem.r + 1), -1);
  }
  return m;
}

std::int64_t spline_dimension_stacked(const SplineProblem& problem, const RankOptions& opts) {
  const GradedMatrix m = stacked_system(problem, {});
  return static_cast<std::int64_t>(nullity(m, opts));
}

std::size_t conformality_rank_mod(const SplineProblem& problem, const PrimeField& field, bool parallel) {
  check(problem);
  const auto& mesh = problem.mesh;
  const int k = problem.k;
  const int e = problem.r + 1;
  const int qdeg = k - e;
  if (qdeg < 0 || mesh.f0() == 0) return 0;

  const MonomialBasis qbasis(qdeg);
  const MonomialBasis pbasis(e);
  const auto n_rows = static_cast<std::size_t>(monomial_count(k));
  const auto m_cols = qbasis.size();

  std::vector<std::vector<std::uint64_t>> pow_mod(mesh.edges().size());
  {
    const auto powers = edge_powers(mesh, e);
    for (std::size_t id = 0; id < powers.size(); ++id) {
      for (const auto& c : powers[id]) pow_mod[id].push_back(field.from_integer(c));
    }
  }

  const auto ti = totally_interior_edges(mesh);
  std::vector<std::size_t> ti_index(mesh.edges().size(), SIZE_MAX);
  for (std::size_t i = 0; i < ti.size(); ++i) ti_index[ti[i]] = i;

  // Vertices touched by totally interior edges get a block in the reduced matrix.
  std::vector<std::size_t> block_of(mesh.vertex_count(), SIZE_MAX);
  std::size_t blocks = 0;
  for (VertexId v : mesh.interior_vertices()) {
    for (EdgeId id : mesh.edges_at(v)) {
      if (ti_index[id] != SIZE_MAX) {
        block_of[v] = blocks++;
        break;
      }
    }
  }
  ModMatrix reduced(ti.size() * m_cols, blocks * n_rows, field.p);

  std::size_t total = 0;
  for (VertexId v : mesh.interior_vertices()) {
    std::vector<EdgeId> pendant;
    for (EdgeId id : mesh.edges_at(v)) {
      if (ti_index[id] == SIZE_MAX) pendant.push_back(id);
    }
    ModMatrix pend(pendant.size() * m_cols, n_rows, field.p);
    for (std::size_t i = 0; i < pendant.size(); ++i) {
      const bool neg = mesh.edges()[pendant[i]].v[1] == v;
      for (std::size_t c = 0; c < m_cols; ++c) {
        write_product(pend.row(i * m_cols + c), pow_mod[pendant[i]], pbasis, qbasis[c], k, neg, field);
      }
    }
    const std::size_t prank = parallel ? modular_rank_parallel(pend) : modular_rank(pend);
    total += prank;
    if (block_of[v] == SIZE_MAX) continue;

    // Rows 0..prank-1 of pend are now an echelon basis with unit pivots.
    std::vector<std::size_t> pivots(prank);
    for (std::size_t i = 0; i < prank; ++i) {
      std::size_t c = 0;
      while (pend.at(i, c) == 0) ++c;
      pivots[i] = c;
    }
    const std::size_t offset = block_of[v] * n_rows;
    for (EdgeId id : mesh.edges_at(v)) {
      if (ti_index[id] == SIZE_MAX) continue;
      const bool neg = mesh.edges()[id].v[1] == v;
      const auto first = static_cast<long long>(ti_index[id] * m_cols);
      const auto last = first + static_cast<long long>(m_cols);
      auto reduce_one = [&](long long row) {
        std::uint64_t* dst = reduced.row(static_cast<std::size_t>(row)) + offset;
        write_product(dst, pow_mod[id], pbasis, qbasis[static_cast<std::size_t>(row - first)], k, neg, field);
        for (std::size_t i = 0; i < prank; ++i) {
          const std::uint64_t f = dst[pivots[i]];
          if (f == 0) continue;
          const std::uint64_t nf = field.p - f;
          const std::uint64_t* b = pend.row(i);
          for (std::size_t c = pivots[i]; c < n_rows; ++c) dst[c] = (dst[c] + nf * b[c]) % field.p;
        }
      };
      if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long row = first; row < last; ++row) reduce_one(row);
      } else {
        for (long long row = first; row < last; ++row) reduce_one(row);
      }
    }
  }
  total += parallel ? modular_rank_parallel(reduced) : modular_rank(reduced);
  return total;
}

ConformalityRank conformality_rank(const SplineProblem& problem, const SplineOptions& opts) {
  check(problem);
  const auto& mesh = problem.mesh;
  const int k = problem.k;
  const int e = problem.r + 1;
  ConformalityRank out;
  if (k - e < 0 || mesh.f0() == 0) return out;

  std::size_t cap = 0;
  for (VertexId v : mesh.interior_vertices()) {
    const auto vi = make_vertex_ideal(mesh, v, problem.r);
    cap += static_cast<std::size_t>(monomial_count(k) - local_hilbert(vi, k));
  }
  const auto rows = mesh.f0() * static_cast<std::size_t>(monomial_count(k));
  const auto cols = mesh.f1() * static_cast<std::size_t>(monomial_count(k - e));
  out.upper_bound = std::min({cap, rows, cols});

  // Hadamard data for the integer matrix. Column of edge e: one copy of
  // l_e^(r+1) per interior endpoint. Row (v, mu): squares of the entries
  // of every l_e^(r+1) monomial dividing mu.
  const auto powers = edge_powers(mesh, e);
  const MonomialBasis pbasis(e);
  const MonomialBasis kbasis(k);
  std::vector<std::size_t> col_bits;
  for (EdgeId id : mesh.interior_edges()) {
    Integer norm2 = 0;
    for (const auto& c : powers[id]) norm2 += c * c;
    int ends = 0;
    for (VertexId v : mesh.edges()[id].v) ends += mesh.is_interior_vertex(v) ? 1 : 0;
    if (ends == 0) continue;
    const std::size_t bits = norm_bits(norm2 * ends);
    col_bits.insert(col_bits.end(), static_cast<std::size_t>(monomial_count(k - e)), bits);
  }
  std::vector<std::size_t> row_bits;
  for (VertexId v : mesh.interior_vertices()) {
    for (const auto& mu : kbasis.monomials()) {
      Integer norm2 = 0;
      for (EdgeId id : mesh.edges_at(v)) {
        for (std::size_t t = 0; t < pbasis.size(); ++t) {
          const auto& m = pbasis[t];
          if (m[0] <= mu[0] && m[1] <= mu[1] && m[2] <= mu[2]) norm2 += powers[id][t] * powers[id][t];
        }
      }
      row_bits.push_back(norm_bits(norm2));
    }
  }

  auto rank_mod = [&](const PrimeField& f) { return conformality_rank_mod(problem, f, opts.parallel); };
  auto bits = [&](std::size_t s) { return hadamard_bits(row_bits, col_bits, s); };
  const auto cert = certify_rank(rank_mod, bits, out.upper_bound, opts.seed);
  out.rank = cert.rank;
  out.primes = cert.primes;
  return out;
}

std::int64_t spline_dimension(const SplineProblem& problem, const SplineOptions& opts) {
  check(problem);
  const auto& mesh = problem.mesh;
  const auto cr = conformality_rank(problem, opts);
  return monomial_count(problem.k) + static_cast<std::int64_t>(mesh.f1()) * monomial_count(problem.k - problem.r - 1) -
         static_cast<std::int64_t>(cr.rank);
}

std::vector<DimensionRow> dimension_table(const Triangulation& mesh, int r, int k_from, int k_to,
                                          const SplineOptions& opts) {
  if (k_from > k_to) throw std::invalid_argument("empty degree range");
  if (k_from < 0) throw std::invalid_argument("negative degree");
  std::vector<DimensionRow> rows(static_cast<std::size_t>(k_to - k_from + 1));
  const auto n = static_cast<long long>(rows.size());
  // Large k first keeps the dynamic schedule balanced.
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (long long i = n - 1; i >= 0; --i) {
    const int k = k_from + static_cast<int>(i);
    rows[static_cast<std::size_t>(i)] = {k, spline_dimension({mesh, r, k}, opts)};
  }
  return rows;
}

}  // namespace splinedim
