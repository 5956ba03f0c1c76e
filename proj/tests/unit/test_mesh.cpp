#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "splinedim/mesh.hpp"

using namespace splinedim;

namespace {

std::string mesh_text(const std::string& vertices, const std::string& triangles) {
  return R"({"vertices": )" + vertices + R"(, "triangles": )" + triangles + "}";
}

void expect_error(const std::string& text, MeshError::Kind kind, const std::string& fragment) {
  try {
    parse_mesh(text);
    FAIL("accepted invalid mesh: " << text);
  } catch (const MeshError& e) {
    CHECK(e.kind() == kind);
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, std::string(e.what()));
  }
}

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("0/7") == 0);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    for (const char* bad : {"", "1/0", "a", "1/-2", " 1", "1/", "/2", "1.5", "+-1", "--1"}) {
      CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
  }

  TEST_CASE("bundled meshes: counts and Euler relation") {
    const auto tri = load_mesh("triangle");
    CHECK(tri.face_count() == 1);
    CHECK(tri.f0() == 0);
    CHECK(tri.f1() == 0);
    const auto two = load_mesh("two_triangles");
    CHECK(two.face_count() == 2);
    CHECK(two.f0() == 0);
    CHECK(two.f1() == 1);
    const auto ms = load_mesh("morgan_scott");
    CHECK(ms.face_count() == 7);
    CHECK(ms.f0() == 3);
    CHECK(ms.f1() == 9);
    for (const auto& name : bundled()) {
      const auto m = load_mesh(name);
      CHECK(static_cast<long>(m.face_count()) - static_cast<long>(m.f1()) + static_cast<long>(m.f0()) == 1);
      CHECK(static_cast<long>(m.vertex_count()) - static_cast<long>(m.edges().size()) +
                static_cast<long>(m.face_count()) ==
            1);
      for (const auto& e : m.edges()) CHECK((e.triangles.size() == 1 || e.triangles.size() == 2));
    }
  }

  TEST_CASE("totally interior edges") {
    CHECK(totally_interior_edges(load_mesh("two_triangles")).empty());
    const auto ms = load_mesh("morgan_scott");
    const auto ti = totally_interior_edges(ms);
    REQUIRE(ti.size() == 3);
    for (auto e : ti) {
      for (auto v : ms.edges()[e].v) CHECK(v >= 3);  // inner triangle is v3 v4 v5
    }
    const auto sy = load_mesh("sy_delta");
    const auto ti2 = totally_interior_edges(sy);
    REQUIRE(ti2.size() == 2);
    CHECK(ms.edges().size() > 0);
    CHECK(sy.edges()[ti2[0]].v == std::array<VertexId, 2>{0, 1});
    CHECK(sy.edges()[ti2[1]].v == std::array<VertexId, 2>{0, 2});
    for (const auto& name : bundled()) {
      const auto m = load_mesh(name);
      for (auto e : totally_interior_edges(m)) {
        CHECK(!m.edges()[e].is_boundary());
        CHECK(m.is_interior_vertex(m.edges()[e].v[0]));
        CHECK(m.is_interior_vertex(m.edges()[e].v[1]));
      }
    }
  }

  TEST_CASE("slope counts") {
    const auto cross = cross_mesh();
    CHECK(slope_count(cross, 0) == 2);
    CHECK_THROWS_AS(slope_count(cross, 1), std::invalid_argument);
    const auto ms = load_mesh("morgan_scott");
    for (auto v : ms.interior_vertices()) CHECK(slope_count(ms, v) == 4);
    const auto sy = load_mesh("sy_delta");
    REQUIRE(sy.f0() == 3);
    for (auto v : sy.interior_vertices()) CHECK(slope_count(sy, v) == 3);
    // slope_count = degree exactly when no two edges at v are collinear
    for (const auto& m : {ms, sy, cross, pentagon_fan()}) {
      for (auto v : m.interior_vertices()) {
        bool collinear = false;
        const auto& es = m.edges_at(v);
        for (std::size_t i = 0; i < es.size(); ++i) {
          for (std::size_t j = i + 1; j < es.size(); ++j) collinear |= edge_form(m, es[i]) == edge_form(m, es[j]);
        }
        CHECK((slope_count(m, v) == es.size()) == !collinear);
        CHECK(slope_count(m, v) >= 2);
        CHECK(slope_count(m, v) <= es.size());
      }
    }
  }

  TEST_CASE("edge forms") {
    auto form = [](const char* a, const char* b, const char* c, const char* d) {
      return edge_form(Point2{parse_rational(a), parse_rational(b)}, Point2{parse_rational(c), parse_rational(d)});
    };
    CHECK(form("0", "0", "1", "0") == LinearForm{0, 1, 0});
    CHECK(form("0", "0", "1", "1") == LinearForm{1, -1, 0});
    CHECK(form("1", "0", "0", "1") == LinearForm{1, 1, -1});
    CHECK(form("1/2", "0", "0", "1/3") == LinearForm{2, 3, -1});
    CHECK(to_string(form("1", "0", "0", "1")) == "x + y - z");
    CHECK_THROWS_AS(form("1", "1", "1", "1"), std::invalid_argument);
    for (const auto& name : bundled()) {
      const auto m = load_mesh(name);
      for (EdgeId e = 0; e < m.edges().size(); ++e) {
        const auto l = edge_form(m, e);
        CHECK(l.vanishes_at(m.vertices()[m.edges()[e].v[0]]));
        CHECK(l.vanishes_at(m.vertices()[m.edges()[e].v[1]]));
        CHECK(!(l.a == 0 && l.b == 0 && l.c == 0));
      }
    }
  }

  TEST_CASE("serialize round trip") {
    for (const auto& name : bundled()) {
      const auto m = load_mesh(name);
      CHECK(parse_mesh(serialize_mesh(m)) == m);
      CHECK(serialize_mesh(parse_mesh(serialize_mesh(m))) == serialize_mesh(m));
    }
    const auto m = parse_mesh(mesh_text(R"([["2/4","0"],["1","0"],["0","3/3"]])", "[[2,0,1]]"));
    const auto text = serialize_mesh(m);
    CHECK(text.find("\"1/2\"") != std::string::npos);
    CHECK(text.find("2/4") == std::string::npos);
    CHECK(m.triangles()[0] == Triangle{0, 1, 2});
  }

  TEST_CASE("non-convex disk accepted") {
    // L-shaped hexagon
    const auto m = make_mesh({{"0", "0"}, {"2", "0"}, {"2", "1"}, {"1", "1"}, {"1", "2"}, {"0", "2"}},
                             {{0, 1, 2}, {0, 2, 3}, {0, 3, 5}, {3, 4, 5}});
    CHECK(m.f0() == 0);
    CHECK(m.f1() == 3);
  }

  TEST_CASE("parse errors") {
    expect_error("{", MeshError::Kind::parse, "malformed");
    expect_error(R"({"vertices": []})", MeshError::Kind::parse, "triangles");
    expect_error(mesh_text(R"([["0","0"],["1","x"],["0","1"]])", "[[0,1,2]]"), MeshError::Kind::parse, "vertex 1");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1/0"]])", "[[0,1,2]]"), MeshError::Kind::parse, "vertex 2");
    expect_error(mesh_text(R"([["0","0"],["1","0"],[0,1]])", "[[0,1,2]]"), MeshError::Kind::parse, "vertex 2");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"]])", "[[0,1,-1]]"), MeshError::Kind::parse, "bad index");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"]])", "[[0,1]]"), MeshError::Kind::parse, "triangle 0");
  }

  TEST_CASE("validation errors name the simplex") {
    const std::string three = R"([["0","0"],["1","0"],["0","1"]])";
    expect_error(mesh_text(three, "[[0,1,3]]"), MeshError::Kind::parse, "bad index 3");
    expect_error(mesh_text(three, "[[0,1,1]]"), MeshError::Kind::validation, "repeats");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["2","0"]])", "[[0,1,2]]"), MeshError::Kind::validation,
                 "degenerate");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"],["0","2/2"]])", "[[0,1,2],[0,1,3]]"),
                 MeshError::Kind::validation, "vertex 3 coincides with vertex 2");
    // three triangles on edge {0,1}
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"],["0","-1"],["1","1"]])", "[[0,1,2],[0,1,3],[0,1,4]]"),
                 MeshError::Kind::validation, "non-manifold");
    // two triangles touching at one vertex
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"],["-1","0"],["0","-1"]])", "[[0,1,2],[0,3,4]]"),
                 MeshError::Kind::validation, "vertex 0");
    // disjoint triangles
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"],["5","5"],["6","5"],["5","6"]])", "[[0,1,2],[3,4,5]]"),
                 MeshError::Kind::validation, "");
    expect_error(mesh_text(R"([["0","0"],["1","0"],["0","1"],["7","7"]])", "[[0,1,2]]"), MeshError::Kind::validation,
                 "vertex 3 belongs to no triangle");
    // second triangle folded over the first
    expect_error(mesh_text(R"([["0","0"],["2","0"],["0","2"],["1","1/2"]])", "[[0,1,2],[0,1,3]]"),
                 MeshError::Kind::validation, "folded");
    expect_error(mesh_text(three, "[[0,1,2],[2,1,0]]"), MeshError::Kind::validation, "twice");
  }

  TEST_CASE("annulus rejected") {
    // square with a square hole, 8 triangles
    const std::string v =
        R"([["0","0"],["3","0"],["3","3"],["0","3"],["1","1"],["2","1"],["2","2"],["1","2"]])";
    const std::string t = "[[0,1,5],[0,5,4],[1,2,6],[1,6,5],[2,3,7],[2,7,6],[3,0,4],[3,4,7]]";
    expect_error(mesh_text(v, t), MeshError::Kind::validation, "");
  }

  TEST_CASE("load by path and by name") {
    const std::string path = "splinedim_test_mesh.json";
    {
      std::ofstream out(path);
      out << *bundled_mesh_text("morgan_scott");
    }
    CHECK(load_mesh(path) == load_mesh("morgan_scott"));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_mesh("no_such_mesh_anywhere"), MeshError);
    CHECK(bundled_mesh_names().size() == 4);
  }
}
