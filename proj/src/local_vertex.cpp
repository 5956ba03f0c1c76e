#include "splinedim/local_vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "splinedim/graded_matrix.hpp"
#include "splinedim/polynomial.hpp"

namespace splinedim {

VertexIdeal make_vertex_ideal(const Point2& point, std::vector<LinearForm> forms, int r) {
  if (r < 0) throw std::invalid_argument("negative smoothness");
  VertexIdeal vi;
  vi.point = point;
  vi.r = r;
  for (auto& f : forms) {
    f = LinearForm::canonical(f.a, f.b, f.c);
    if (!f.vanishes_at(point)) throw std::invalid_argument("form " + to_string(f) + " misses the vertex");
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  if (forms.size() < 2) throw std::invalid_argument("a vertex ideal needs at least two slopes");
  vi.generators = std::move(forms);
  return vi;
}

VertexIdeal make_vertex_ideal(const Triangulation& mesh, VertexId v, int r) {
  VertexIdeal vi = make_vertex_ideal(mesh.vertices().at(v), distinct_forms_at(mesh, v), r);
  vi.vertex = v;
  return vi;
}

std::vector<std::int64_t> binary_ideal_dims(const VertexIdeal& vi, int max_degree, const RankOptions& opts) {
  const int e = vi.exponent();
  // (a x' + b y')^e: coefficient of x'^i y'^(e-i) is C(e,i) a^i b^(e-i).
  std::vector<std::vector<Integer>> powers;
  for (const auto& g : vi.generators) {
    // canonical forms are integral; a x + b y + c z through the point is a x' + b y'
    const Integer a = g.a.get_num();
    const Integer b = g.b.get_num();
    std::vector<Integer> coeffs(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= e; ++i) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(i));
      Integer ai;
      Integer bi;
      mpz_pow_ui(ai.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
      mpz_pow_ui(bi.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e - i));
      coeffs[i] = binom * ai * bi;
    }
    powers.push_back(std::move(coeffs));
  }

  std::vector<std::int64_t> dims;
  bool saturated = false;
  for (int d = 0; d <= max_degree; ++d) {
    if (d < e) {
      dims.push_back(0);
      continue;
    }
    if (saturated) {
      dims.push_back(d + 1);
      continue;
    }
    const int b = d - e;
    IntegerMatrix m(static_cast<std::size_t>(d) + 1, powers.size() * (static_cast<std::size_t>(b) + 1));
    std::size_t col = 0;
    for (const auto& p : powers) {
      for (int s = 0; s <= b; ++s, ++col) {
        for (int i = 0; i <= e; ++i) m.at(static_cast<std::size_t>(i + s), col) = p[i];
      }
    }
    const auto rk = static_cast<std::int64_t>(rank(m, opts));
    saturated = rk == d + 1;
    dims.push_back(rk);
  }
  return dims;
}

std::vector<std::int64_t> local_hilbert_series(const VertexIdeal& vi, int max_degree, const RankOptions& opts) {
  std::vector<std::int64_t> series;
  if (max_degree < 0) return series;
  const auto dims = binary_ideal_dims(vi, max_degree, opts);
  std::int64_t sum = 0;
  for (int d = 0; d <= max_degree; ++d) {
    sum += d + 1 - dims[d];
    series.push_back(sum);
  }
  return series;
}

std::int64_t local_hilbert(const VertexIdeal& vi, int k, const RankOptions& opts) {
  if (k < 0) throw std::invalid_argument("negative degree");
  return local_hilbert_series(vi, k, opts).back();
}

std::int64_t local_hilbert_direct(const VertexIdeal& vi, int k, const RankOptions& opts) {
  if (k < 0) throw std::invalid_argument("negative degree");
  const int src = k - vi.exponent();
  if (src < 0) return monomial_count(k);
  std::vector<GradedMatrix::BlockSpec> cols;
  for (std::size_t i = 0; i < vi.generators.size(); ++i) cols.push_back({"g" + std::to_string(i), src});
  GradedMatrix m({{"R", k}}, cols);
  for (std::size_t i = 0; i < vi.generators.size(); ++i) m.add_multiplication(0, i, power(vi.generators[i], vi.exponent()));
  return monomial_count(k) - static_cast<std::int64_t>(rank(m, opts));
}

SyzygyProfile syzygy_degrees(const VertexIdeal& vi, const RankOptions& opts) {
  const auto n = static_cast<std::int64_t>(vi.generators.size());
  if (n < 2) throw std::invalid_argument("a vertex ideal needs at least two slopes");
  const int e = vi.exponent();
  SyzygyProfile profile{vi.vertex, {}};
  // n forms of degree e in two variables: generators occur in coefficient
  // degree <= e (the Koszul pairs), so this range is exhaustive.
  const int max_b = e;
  const auto dims = binary_ideal_dims(vi, e + max_b, opts);
  for (int b = 0; b <= max_b && static_cast<std::int64_t>(profile.degrees.size()) < n - 1; ++b) {
    std::int64_t syz = n * (b + 1) - dims[static_cast<std::size_t>(e + b)];
    for (int prev : profile.degrees) syz -= b - prev + 1;
    if (syz < 0) throw std::logic_error("syzygy count went negative");
    profile.degrees.insert(profile.degrees.end(), static_cast<std::size_t>(syz), b);
  }
  if (static_cast<std::int64_t>(profile.degrees.size()) != n - 1) throw std::logic_error("syzygy module is not free of rank n-1");
  return profile;
}

std::int64_t sigma(int n, int r, int k) {
  if (n <= 1) throw std::invalid_argument("sigma needs at least two slopes");
  if (r < 0) throw std::invalid_argument("negative smoothness");
  std::int64_t total = 0;
  for (std::int64_t j = 1; j <= k - r; ++j) {
    const std::int64_t term = r + 1 + j * (1 - n);
    if (term <= 0) break;
    total += term;
  }
  return total;
}

std::int64_t sigma(int n, int r) { return sigma(n, r, r + r + 2); }

}  // namespace splinedim
