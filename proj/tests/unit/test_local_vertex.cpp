#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "splinedim/local_vertex.hpp"

using namespace splinedim;

namespace {

std::int64_t c2(std::int64_t m) { return choose2(m); }

// Interior vertices of every bundled mesh plus the test meshes.
std::vector<std::pair<Triangulation, VertexId>> vertices() {
  std::vector<std::pair<Triangulation, VertexId>> out;
  for (const auto& m : {load_mesh("morgan_scott"), load_mesh("sy_delta"), cross_mesh(), pentagon_fan()}) {
    for (auto v : m.interior_vertices()) out.emplace_back(m, v);
  }
  return out;
}

// n lines through (px, py) with random integer directions.
VertexIdeal random_ideal(std::mt19937_64& rng, int n, int r) {
  const Point2 p{Rational(static_cast<int>(rng() % 7) - 3) / 2, Rational(static_cast<int>(rng() % 5) - 2)};
  std::vector<LinearForm> forms;
  while (static_cast<int>(forms.size()) < n) {
    const int a = static_cast<int>(rng() % 9) - 4;
    const int b = static_cast<int>(rng() % 9) - 4;
    if (a == 0 && b == 0) continue;
    const auto f = LinearForm::canonical(a, b, -(a * p.x + b * p.y));
    if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
  }
  return make_vertex_ideal(p, forms, r);
}

}  // namespace

TEST_SUITE("local_vertex") {
  TEST_CASE("vertex ideals") {
    const auto cross = cross_mesh();
    const auto vi = make_vertex_ideal(cross, 0, 1);
    CHECK(vi.generators.size() == 2);
    CHECK(vi.exponent() == 2);
    CHECK_THROWS_AS(make_vertex_ideal(cross, 1, 1), std::invalid_argument);
    // duplicates collapse
    const auto dup = make_vertex_ideal(Point2{0, 0}, {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}}, 2);
    CHECK(dup.generators.size() == 2);
    CHECK_THROWS(make_vertex_ideal(Point2{0, 0}, {{1, 0, 1}, {0, 1, 0}}, 1));
    CHECK_THROWS(make_vertex_ideal(Point2{0, 0}, {{1, 0, 0}, {3, 0, 0}}, 1));
    CHECK_THROWS(make_vertex_ideal(Point2{0, 0}, {{1, 0, 0}, {0, 1, 0}}, -1));
  }

  TEST_CASE("hilbert function: hand examples") {
    const auto cross = make_vertex_ideal(cross_mesh(), 0, 1);
    CHECK(local_hilbert(cross, 2) == 4);
    CHECK(local_hilbert_direct(cross, 2) == 4);
    const auto sy = load_mesh("sy_delta");
    const auto v0 = make_vertex_ideal(sy, 0, 3);
    REQUIRE(v0.generators.size() == 3);
    CHECK(local_hilbert_direct(v0, 6) == c2(8) - 3 * c2(4) + 2 * c2(2));
    CHECK(local_hilbert(v0, 6) == 12);
    for (const auto& [m, v] : vertices()) {
      for (int r = 0; r <= 3; ++r) {
        const auto vi = make_vertex_ideal(m, v, r);
        for (int k = 0; k <= r; ++k) CHECK(local_hilbert(vi, k) == monomial_count(k));
      }
    }
  }

  TEST_CASE("binary slices match the 3-variable rank") {
    for (const auto& [m, v] : vertices()) {
      for (int r = 0; r <= 3; ++r) {
        const auto vi = make_vertex_ideal(m, v, r);
        const auto series = local_hilbert_series(vi, 3 * r + 4);
        for (int k = 0; k <= 3 * r + 4; ++k) {
          CHECK(series[static_cast<std::size_t>(k)] == local_hilbert_direct(vi, k));
        }
      }
    }
  }

  TEST_CASE("hilbert function stabilizes") {
    for (const auto& [m, v] : vertices()) {
      for (int r = 0; r <= 5; ++r) {
        const auto s = local_hilbert_series(make_vertex_ideal(m, v, r), 4 * r + 6);
        for (int k = 4 * r + 2; k <= 4 * r + 6; ++k) CHECK(s[static_cast<std::size_t>(k)] == s[4 * r + 2]);
      }
    }
  }

  TEST_CASE("hilbert function equals C(r+2,2) + sigma above degree r") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int r = static_cast<int>(rng() % 7);
      const auto vi = random_ideal(rng, n, r);
      const auto s = local_hilbert_series(vi, 4 * r + 4);
      for (int k = r; k <= 4 * r + 4; ++k) {
        CHECK(s[static_cast<std::size_t>(k)] == monomial_count(r) + sigma(n, r, k));
      }
    }
  }

  TEST_CASE("syzygy degrees") {
    // complete intersection: the Koszul syzygy
    for (int r = 0; r <= 6; ++r) CHECK(syzygy_degrees(make_vertex_ideal(cross_mesh(), 0, r)).degrees == std::vector<int>{r + 1});
    const auto sy = load_mesh("sy_delta");
    for (auto v : sy.interior_vertices()) {
      for (int r = 0; r <= 10; ++r) {
        const auto p = syzygy_degrees(make_vertex_ideal(sy, v, r));
        CHECK(p.vertex == v);
        CHECK(p.degrees == std::vector<int>{(r + 1) / 2, (r + 2) / 2});
      }
    }
    std::mt19937_64 rng(4);
    for (int j = 1; j <= 3; ++j) {
      CHECK(syzygy_degrees(random_ideal(rng, 3, 4 * j - 1)).degrees == std::vector<int>{2 * j, 2 * j});
    }
  }

  TEST_CASE("syzygy profile reproduces the hilbert function") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int r = static_cast<int>(rng() % 8);
      const auto vi = random_ideal(rng, n, r);
      const auto p = syzygy_degrees(vi);
      CHECK(p.degrees.size() == static_cast<std::size_t>(n - 1));
      int sum = 0;
      for (int b : p.degrees) {
        CHECK(b >= 0);
        sum += b;
      }
      CHECK(sum == r + 1);
      for (int k = 0; k <= 4 * r + 4; ++k) {
        std::int64_t hf = c2(k + 2) - n * c2(k - r + 1);
        for (int b : p.degrees) hf += c2(k - (r + 1) - b + 2);
        CHECK(hf == local_hilbert(vi, k));
      }
    }
  }

  TEST_CASE("sigma") {
    CHECK(sigma(2, 1) == 1);
    CHECK(sigma(4, 1) == 0);
    CHECK(sigma(3, 3) == 2);
    CHECK(sigma(2, 0) == 0);
    CHECK(sigma(2, 3) == 3 + 2 + 1);
    CHECK_THROWS(sigma(1, 2));
    CHECK_THROWS(sigma(0, 2));
    for (int r = 0; r <= 12; ++r) {
      for (int n = 2; n <= 16; ++n) {
        if (n >= r + 2) CHECK(sigma(n, r) == 0);
        CHECK(sigma(n, r, r) == 0);
        CHECK(sigma(n, r, 2 * r + 1) == sigma(n, r));
        for (int k = r; k < 2 * r + 1; ++k) CHECK(sigma(n, r, k) <= sigma(n, r, k + 1));
      }
    }
  }
}
