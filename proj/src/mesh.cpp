#include "splinedim/mesh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace splinedim {

namespace {

std::string simplex_name(VertexId a, VertexId b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string simplex_name(const Triangle& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

Rational orientation(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

[[noreturn]] void invalid(const std::string& what) {
  throw MeshError(MeshError::Kind::validation, what);
}

}  // namespace

LinearForm LinearForm::canonical(Rational a, Rational b, Rational c) {
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("zero linear form");
  Integer den_lcm = 1;
  for (const auto* q : {&a, &b, &c}) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den_mpz_t());
  Integer na = a.get_num() * (den_lcm / a.get_den());
  Integer nb = b.get_num() * (den_lcm / b.get_den());
  Integer nc = c.get_num() * (den_lcm / c.get_den());
  Integer g = gcd(gcd(na, nb), nc);
  na /= g;
  nb /= g;
  nc /= g;
  const Integer& lead = na != 0 ? na : (nb != 0 ? nb : nc);
  if (lead < 0) {
    na = -na;
    nb = -nb;
    nc = -nc;
  }
  return LinearForm{Rational(na), Rational(nb), Rational(nc)};
}

bool operator<(const LinearForm& l, const LinearForm& r) {
  if (l.a != r.a) return l.a < r.a;
  if (l.b != r.b) return l.b < r.b;
  return l.c < r.c;
}

std::string to_string(const LinearForm& form) {
  std::string out;
  const std::array<std::pair<const Rational*, const char*>, 3> terms{
      {{&form.a, "x"}, {&form.b, "y"}, {&form.c, "z"}}};
  for (const auto& [coef, var] : terms) {
    if (*coef == 0) continue;
    const bool negative = *coef < 0;
    Rational mag = abs(*coef);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
  }
  return out;
}

Triangulation::Triangulation(std::vector<Point2> vertices, std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (triangles_.empty()) invalid("mesh has no triangles");
  const std::size_t n = vertices_.size();
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (VertexId v : tri) {
      if (v >= n) invalid("triangle " + std::to_string(t) + " references missing vertex " + std::to_string(v));
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      invalid("triangle " + std::to_string(t) + " " + simplex_name(tri) + " repeats a vertex");
    }
  }
  {
    std::map<std::pair<Rational, Rational>, VertexId> seen;
    for (VertexId v = 0; v < n; ++v) {
      auto [it, fresh] = seen.emplace(std::make_pair(vertices_[v].x, vertices_[v].y), v);
      if (!fresh) {
        invalid("vertex " + std::to_string(v) + " coincides with vertex " + std::to_string(it->second));
      }
    }
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    if (orientation(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]) == 0) {
      invalid("triangle " + std::to_string(t) + " " + simplex_name(tri) + " is degenerate (collinear vertices)");
    }
  }
  for (auto& tri : triangles_) std::sort(tri.begin(), tri.end());
  {
    auto sorted = triangles_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      invalid("triangle " + simplex_name(*dup) + " appears twice");
    }
    triangles_ = std::move(sorted);
  }

  build_edges();
  validate_links();
  validate_boundary_cycle();

  const auto v_total = static_cast<long long>(n);
  const auto e_total = static_cast<long long>(edges_.size());
  const auto f_total = static_cast<long long>(triangles_.size());
  if (v_total - e_total + f_total != 1) {
    invalid("Euler characteristic V - E + F = " + std::to_string(v_total - e_total + f_total) +
            ", expected 1 (not a disk)");
  }
  validate_folds();

  for (VertexId v = 0; v < n; ++v) {
    if (!boundary_vertex_[v]) interior_vertices_.push_back(v);
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!edges_[e].is_boundary()) interior_edges_.push_back(e);
  }
}

void Triangulation::build_edges() {
  std::map<std::array<VertexId, 2>, std::vector<TriangleId>> incidence;
  for (TriangleId t = 0; t < triangles_.size(); ++t) {
    const auto& [a, b, c] = triangles_[t];
    incidence[{a, b}].push_back(t);
    incidence[{b, c}].push_back(t);
    incidence[{a, c}].push_back(t);
  }
  vertex_edges_.assign(vertices_.size(), {});
  boundary_vertex_.assign(vertices_.size(), false);
  for (auto& [key, tris] : incidence) {
    if (tris.size() > 2) {
      invalid("edge " + simplex_name(key[0], key[1]) + " is non-manifold (" + std::to_string(tris.size()) +
              " triangles)");
    }
    const EdgeId id = edges_.size();
    edges_.push_back(Edge{key, tris});
    vertex_edges_[key[0]].push_back(id);
    vertex_edges_[key[1]].push_back(id);
    if (tris.size() == 1) {
      boundary_vertex_[key[0]] = true;
      boundary_vertex_[key[1]] = true;
    }
  }
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertex_edges_[v].empty()) invalid("vertex " + std::to_string(v) + " belongs to no triangle");
  }
}

// The link of a vertex must be a single cycle (interior) or a single path
// (boundary); anything else is a pinch point.
void Triangulation::validate_links() {
  std::vector<std::map<VertexId, std::vector<VertexId>>> links(vertices_.size());
  for (const auto& [a, b, c] : triangles_) {
    auto add = [&](VertexId v, VertexId p, VertexId q) {
      links[v][p].push_back(q);
      links[v][q].push_back(p);
    };
    add(a, b, c);
    add(b, a, c);
    add(c, a, b);
  }
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const auto& link = links[v];
    std::size_t ends = 0;
    for (const auto& [u, nbrs] : link) {
      if (nbrs.size() == 1) ++ends;
    }
    // Edge manifoldness bounds link degrees by 2.
    std::set<VertexId> reached;
    std::vector<VertexId> stack{link.begin()->first};
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      if (!reached.insert(u).second) continue;
      for (VertexId w : link.at(u)) stack.push_back(w);
    }
    const bool connected = reached.size() == link.size();
    const bool boundary = boundary_vertex_[v];
    if (!connected || (boundary && ends != 2) || (!boundary && ends != 0)) {
      invalid("vertex " + std::to_string(v) + " is a pinch point (its link is not a single " +
              (boundary ? "path" : "cycle") + ")");
    }
  }
}

void Triangulation::validate_boundary_cycle() const {
  std::map<VertexId, std::vector<VertexId>> ring;
  for (const auto& e : edges_) {
    if (!e.is_boundary()) continue;
    ring[e.v[0]].push_back(e.v[1]);
    ring[e.v[1]].push_back(e.v[0]);
  }
  for (const auto& [v, nbrs] : ring) {
    if (nbrs.size() != 2) {
      invalid("boundary vertex " + std::to_string(v) + " has " + std::to_string(nbrs.size()) + " boundary edges");
    }
  }
  const VertexId start = ring.begin()->first;
  VertexId prev = start;
  VertexId cur = ring.at(start)[0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nbrs = ring.at(cur);
    const VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  if (steps != ring.size()) {
    invalid("boundary is disconnected: the cycle through vertex " + std::to_string(start) + " has " +
            std::to_string(steps) + " of " + std::to_string(ring.size()) + " boundary vertices");
  }
}

void Triangulation::validate_folds() const {
  auto opposite = [&](TriangleId t, const Edge& e) {
    for (VertexId v : triangles_[t]) {
      if (v != e.v[0] && v != e.v[1]) return v;
    }
    return VertexId{0};
  };
  for (const auto& e : edges_) {
    if (e.is_boundary()) continue;
    const auto& p = vertices_[e.v[0]];
    const auto& q = vertices_[e.v[1]];
    const int s1 = sgn(orientation(p, q, vertices_[opposite(e.triangles[0], e)]));
    const int s2 = sgn(orientation(p, q, vertices_[opposite(e.triangles[1], e)]));
    if (s1 == s2) {
      invalid("triangles adjacent to edge " + simplex_name(e.v[0], e.v[1]) + " overlap (folded mesh)");
    }
  }
}

std::optional<EdgeId> Triangulation::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  if (a >= vertices_.size() || b >= vertices_.size()) return std::nullopt;
  for (EdgeId e : vertex_edges_[a]) {
    if (edges_[e].v[0] == a && edges_[e].v[1] == b) return e;
  }
  return std::nullopt;
}

VertexId Triangulation::other_end(EdgeId e, VertexId v) const {
  const auto& ends = edges_.at(e).v;
  return ends[0] == v ? ends[1] : ends[0];
}

LinearForm edge_form(const Point2& p, const Point2& q) {
  if (p == q) throw std::invalid_argument("degenerate edge: coincident endpoints");
  return LinearForm::canonical(p.y - q.y, -(p.x - q.x), p.x * q.y - p.y * q.x);
}

LinearForm edge_form(const Triangulation& mesh, EdgeId e) {
  const auto& edge = mesh.edges().at(e);
  return edge_form(mesh.vertices()[edge.v[0]], mesh.vertices()[edge.v[1]]);
}

std::vector<EdgeId> totally_interior_edges(const Triangulation& mesh) {
  std::vector<EdgeId> out;
  for (EdgeId e : mesh.interior_edges()) {
    const auto& edge = mesh.edges()[e];
    if (mesh.is_interior_vertex(edge.v[0]) && mesh.is_interior_vertex(edge.v[1])) out.push_back(e);
  }
  return out;
}

std::vector<LinearForm> distinct_forms_at(const Triangulation& mesh, VertexId v) {
  if (v >= mesh.vertex_count() || !mesh.is_interior_vertex(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not an interior vertex");
  }
  std::vector<LinearForm> forms;
  for (EdgeId e : mesh.edges_at(v)) forms.push_back(edge_form(mesh, e));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

std::size_t slope_count(const Triangulation& mesh, VertexId v) { return distinct_forms_at(mesh, v).size(); }

Triangulation parse_mesh(std::string_view text) {
  using nlohmann::json;
  auto fail = [](const std::string& what) -> MeshError { return MeshError(MeshError::Kind::parse, what); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw fail(std::string("malformed mesh document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("triangles")) {
    throw fail("mesh document needs \"vertices\" and \"triangles\" arrays");
  }
  const auto& jv = doc["vertices"];
  const auto& jt = doc["triangles"];
  if (!jv.is_array() || !jt.is_array()) throw fail("\"vertices\" and \"triangles\" must be arrays");

  std::vector<Point2> vertices;
  vertices.reserve(jv.size());
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const auto& p = jv[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw fail("vertex " + std::to_string(i) + " must be a pair of rational strings");
    }
    try {
      vertices.push_back(Point2{parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>())});
    } catch (const ParseError& e) {
      throw fail("vertex " + std::to_string(i) + ": " + e.what());
    }
  }
  std::vector<Triangle> triangles;
  triangles.reserve(jt.size());
  for (std::size_t t = 0; t < jt.size(); ++t) {
    const auto& tri = jt[t];
    if (!tri.is_array() || tri.size() != 3) throw fail("triangle " + std::to_string(t) + " must have three indices");
    Triangle out{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!tri[k].is_number_integer() || tri[k].get<long long>() < 0 ||
          static_cast<std::size_t>(tri[k].get<long long>()) >= vertices.size()) {
        throw fail("triangle " + std::to_string(t) + " has bad index " + tri[k].dump());
      }
      out[k] = tri[k].get<std::size_t>();
    }
    triangles.push_back(out);
  }
  return Triangulation(std::move(vertices), std::move(triangles));
}

std::string serialize_mesh(const Triangulation& mesh) {
  std::ostringstream os;
  os << "{\n  \"vertices\": [\n";
  const auto& vs = mesh.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << "    [\"" << to_string(vs[i].x) << "\", \"" << to_string(vs[i].y) << "\"]"
       << (i + 1 < vs.size() ? ",\n" : "\n");
  }
  os << "  ],\n  \"triangles\": [\n";
  const auto& ts = mesh.triangles();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    os << "    [" << ts[i][0] << ", " << ts[i][1] << ", " << ts[i][2] << "]" << (i + 1 < ts.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

Triangulation load_mesh(const std::string& name_or_path) {
  if (auto text = bundled_mesh_text(name_or_path)) return parse_mesh(*text);
  std::ifstream in(name_or_path);
  if (!in) throw MeshError(MeshError::Kind::parse, "cannot open mesh '" + name_or_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_mesh(buffer.str());
}

}  // namespace splinedim
