#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

using VertexId = std::size_t;
using TriangleId = std::size_t;
using EdgeId = std::size_t;
using Triangle = std::array<VertexId, 3>;

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// The homogeneous form a*x + b*y + c*z. Forms produced by this library are
/// canonical: integral, content-free, first nonzero coefficient positive, so
/// two forms define the same line iff they compare equal.
struct LinearForm {
  Rational a;
  Rational b;
  Rational c;

  static LinearForm canonical(Rational a, Rational b, Rational c);

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    return a * x + b * y + c * z;
  }
  bool vanishes_at(const Point2& p) const { return evaluate(p.x, p.y, 1) == 0; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend bool operator<(const LinearForm& l, const LinearForm& r);
};

std::string to_string(const LinearForm& form);

struct Edge {
  std::array<VertexId, 2> v;            // v[0] < v[1]
  std::vector<TriangleId> triangles;    // ascending; size 1 (boundary) or 2

  bool is_boundary() const { return triangles.size() == 1; }
};

class MeshError : public std::runtime_error {
 public:
  enum class Kind { parse, validation };

  MeshError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A validated triangulation of a closed disk. Immutable after construction.
/// Triangles are stored canonically: each triple ascending, list sorted.
class Triangulation {
 public:
  /// Throws MeshError (validation) on any violated invariant; the message
  /// names the offending simplex using the caller's indices.
  Triangulation(std::vector<Point2> vertices, std::vector<Triangle> triangles);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return triangles_.size(); }

  bool is_boundary_vertex(VertexId v) const { return boundary_vertex_.at(v); }
  bool is_interior_vertex(VertexId v) const { return !boundary_vertex_.at(v); }

  const std::vector<VertexId>& interior_vertices() const { return interior_vertices_; }
  const std::vector<EdgeId>& interior_edges() const { return interior_edges_; }
  /// Edges incident to v, in edge order.
  const std::vector<EdgeId>& edges_at(VertexId v) const { return vertex_edges_.at(v); }

  std::size_t f0() const { return interior_vertices_.size(); }
  std::size_t f1() const { return interior_edges_.size(); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  VertexId other_end(EdgeId e, VertexId v) const;

  friend bool operator==(const Triangulation& l, const Triangulation& r) {
    return l.vertices_ == r.vertices_ && l.triangles_ == r.triangles_;
  }

 private:
  void build_edges();
  void validate_links();
  void validate_boundary_cycle() const;
  void validate_folds() const;

  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> vertex_edges_;
  std::vector<bool> boundary_vertex_;
  std::vector<VertexId> interior_vertices_;
  std::vector<EdgeId> interior_edges_;
};

/// Canonical form of the line through the edge's endpoints.
LinearForm edge_form(const Triangulation& mesh, EdgeId e);
LinearForm edge_form(const Point2& p, const Point2& q);

/// Interior edges whose endpoints are both interior vertices.
std::vector<EdgeId> totally_interior_edges(const Triangulation& mesh);

/// Distinct edge forms through interior vertex v, sorted. Throws
/// std::invalid_argument for a boundary vertex.
std::vector<LinearForm> distinct_forms_at(const Triangulation& mesh, VertexId v);

/// Number of distinct slopes at interior vertex v.
std::size_t slope_count(const Triangulation& mesh, VertexId v);

Triangulation parse_mesh(std::string_view text);
std::string serialize_mesh(const Triangulation& mesh);

/// Names of the meshes compiled into the library.
std::vector<std::string> bundled_mesh_names();
std::optional<std::string> bundled_mesh_text(std::string_view name);

/// Resolves a bundled name first, then a filesystem path.
Triangulation load_mesh(const std::string& name_or_path);

}  // namespace splinedim
