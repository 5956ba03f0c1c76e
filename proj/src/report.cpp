#include "splinedim/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace splinedim {

using nlohmann::json;

ReportRow to_row(const DiscrepancyReport& d) { return {d.k, d.dim, d.bound, d.chi, d.h1, d.gap}; }

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

std::string to_json(const RunRecord& rec) {
  json doc;  // std::map-backed: keys come out sorted
  doc["command"] = rec.command;
  doc["mesh"] = rec.mesh;
  doc["r"] = rec.r;
  doc["r_to"] = rec.r_to;
  doc["k_range"] = json::array({rec.k_from, rec.k_to});
  doc["engine_version"] = rec.engine_version;
  doc["max_nonzero_h1"] = optional_int(rec.max_nonzero_h1);
  doc["rows"] = json::array();
  for (const auto& row : rec.rows) {
    doc["rows"].push_back({{"k", row.k}, {"dim", row.dim}, {"P", row.bound}, {"chi", row.chi}, {"h1", row.h1},
                           {"gap", row.gap}});
  }
  doc["clauses"] = json::array();
  for (const auto& c : rec.clauses) {
    doc["clauses"].push_back(
        {{"r", c.r}, {"name", c.name}, {"statement", c.statement}, {"pass", c.pass}, {"offending", c.offending}});
  }
  doc["analytics"] = json::array();
  for (const auto& a : rec.analytics) {
    json row{{"r", a.r}, {"theorem_bound", a.theorem_bound}, {"remark_max_degree", a.remark_max_degree},
             {"j", optional_int(a.j)}};
    row["root_exceeds_bound"] = a.root_exceeds_bound ? json(*a.root_exceeds_bound) : json(nullptr);
    doc["analytics"].push_back(row);
  }
  if (rec.elapsed_seconds) doc["elapsed_seconds"] = *rec.elapsed_seconds;
  return doc.dump(2) + "\n";
}

RunRecord parse_run_record(const std::string& text) {
  RunRecord rec;
  try {
    const json doc = json::parse(text);
    rec.command = doc.at("command").get<std::string>();
    rec.mesh = doc.at("mesh").get<std::string>();
    rec.r = doc.at("r").get<int>();
    rec.r_to = doc.at("r_to").get<int>();
    rec.k_from = doc.at("k_range").at(0).get<int>();
    rec.k_to = doc.at("k_range").at(1).get<int>();
    rec.engine_version = doc.at("engine_version").get<std::string>();
    rec.max_nonzero_h1 = read_optional_int(doc.at("max_nonzero_h1"));
    for (const auto& row : doc.at("rows")) {
      rec.rows.push_back({row.at("k").get<int>(), row.at("dim").get<std::int64_t>(), row.at("P").get<std::int64_t>(),
                          row.at("chi").get<std::int64_t>(), row.at("h1").get<std::int64_t>(),
                          row.at("gap").get<std::int64_t>()});
    }
    for (const auto& c : doc.at("clauses")) {
      rec.clauses.push_back({c.at("r").get<int>(), c.at("name").get<std::string>(), c.at("statement").get<std::string>(),
                             c.at("pass").get<bool>(), c.at("offending").get<std::vector<int>>()});
    }
    for (const auto& a : doc.at("analytics")) {
      AnalyticsRow row{a.at("r").get<int>(), a.at("theorem_bound").get<std::string>(),
                       a.at("remark_max_degree").get<std::int64_t>(), read_optional_int(a.at("j")), std::nullopt};
      if (!a.at("root_exceeds_bound").is_null()) row.root_exceeds_bound = a.at("root_exceeds_bound").get<bool>();
      rec.analytics.push_back(row);
    }
    if (doc.contains("elapsed_seconds")) rec.elapsed_seconds = doc.at("elapsed_seconds").get<double>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("bad run record: ") + e.what());
  }
  return rec;
}

std::string to_csv(const RunRecord& rec) {
  std::ostringstream out;
  if (rec.command == "check") {
    out << "r,clause,pass,offending\n";
    for (const auto& c : rec.clauses) {
      out << c.r << ',' << c.name << ',' << (c.pass ? "true" : "false") << ',';
      for (std::size_t i = 0; i < c.offending.size(); ++i) out << (i ? " " : "") << c.offending[i];
      out << "\n";
    }
    return out.str();
  }
  if (rec.command == "analytics") {
    out << "r,theorem_bound,remark_max_degree,j,root_exceeds_bound\n";
    for (const auto& a : rec.analytics) {
      out << a.r << ',' << a.theorem_bound << ',' << a.remark_max_degree << ',';
      if (a.j) out << *a.j;
      out << ',';
      if (a.root_exceeds_bound) out << (*a.root_exceeds_bound ? "true" : "false");
      out << "\n";
    }
    return out.str();
  }
  out << kCsvHeader << "\n";
  for (const auto& row : rec.rows) {
    out << row.k << ',' << row.dim << ',' << row.bound << ',' << row.chi << ',' << row.h1 << ',' << row.gap << "\n";
  }
  return out.str();
}

std::string to_text(const RunRecord& rec) {
  std::ostringstream out;
  if (rec.command == "dim" || rec.command == "bound") {
    for (const auto& row : rec.rows) {
      const auto value = rec.command == "dim" ? row.dim : row.bound;
      if (rec.rows.size() == 1) {
        out << value << "\n";
      } else {
        out << "k=" << row.k << ' ' << value << "\n";
      }
    }
  } else if (rec.command == "sweep") {
    out << "mesh " << rec.mesh << ", r = " << rec.r << "\n";
    out << std::setw(4) << "k" << std::setw(10) << "dim" << std::setw(10) << "P" << std::setw(10) << "chi"
        << std::setw(6) << "h1" << std::setw(6) << "gap" << "\n";
    for (const auto& row : rec.rows) {
      out << std::setw(4) << row.k << std::setw(10) << row.dim << std::setw(10) << row.bound << std::setw(10)
          << row.chi << std::setw(6) << row.h1 << std::setw(6) << row.gap << "\n";
    }
    out << "max_nonzero_h1: " << (rec.max_nonzero_h1 ? std::to_string(*rec.max_nonzero_h1) : "none") << "\n";
  } else if (rec.command == "check") {
    std::size_t failed = 0;
    for (const auto& c : rec.clauses) {
      out << (c.pass ? "PASS" : "FAIL") << "  r=" << c.r << "  " << c.name << ": " << c.statement;
      if (!c.pass && !c.offending.empty()) {
        out << "  [k =";
        for (int k : c.offending) out << ' ' << k;
        out << ']';
      }
      out << "\n";
      failed += c.pass ? 0 : 1;
    }
    out << (rec.clauses.size() - failed) << '/' << rec.clauses.size() << " clauses passed\n";
  } else if (rec.command == "analytics") {
    for (const auto& a : rec.analytics) {
      out << "r=" << a.r << "  (22r+7)/10 = " << a.theorem_bound << "  floor((9r+2)/4) = " << a.remark_max_degree;
      if (a.j) {
        out << "  j=" << *a.j << "  larger root > bound: " << (*a.root_exceeds_bound ? "yes" : "no");
      }
      out << "\n";
    }
  }
  if (rec.elapsed_seconds) out << "elapsed " << *rec.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace splinedim

namespace splinedim {

bool has_sy_delta_combinatorics(const Triangulation& mesh) {
  if (mesh.f0() != 3) return false;
  for (VertexId v : mesh.interior_vertices()) {
    if (slope_count(mesh, v) != 3) return false;
  }
  const auto ti = totally_interior_edges(mesh);
  if (ti.size() != 2) return false;
  const auto& a = mesh.edges()[ti[0]].v;
  const auto& b = mesh.edges()[ti[1]].v;
  return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

std::vector<ClauseResult> run_checks(const Triangulation& mesh, int r, const SplineOptions& opts) {
  auto rows = discrepancy_sweep(mesh, r, 0, 4 * r + 3, opts);
  std::vector<ClauseResult> out;
  auto add = [&](std::string name, std::string statement, auto&& failing) {
    ClauseResult c{r, std::move(name), std::move(statement), true, {}};
    for (const auto& row : rows) {
      if (failing(row)) {
        c.pass = false;
        c.offending.push_back(row.k);
      }
    }
    out.push_back(std::move(c));
  };
  add("lower_bound", "dim >= P (Schumaker lower bound)", [](const DiscrepancyReport& d) { return d.gap < 0; });
  add("h1_nonnegative", "dim - chi >= 0", [](const DiscrepancyReport& d) { return d.h1 < 0; });
  add("polynomial_range", "dim = C(k+2,2) for k <= r",
      [r](const DiscrepancyReport& d) { return d.k <= r && d.dim != monomial_count(d.k); });
  add("equality_3r2", "dim = P for k >= 3r+2",
      [r](const DiscrepancyReport& d) { return d.k >= 3 * r + 2 && d.gap != 0; });
  add("equality_4r1", "h1 = 0 and chi = P for k >= 4r+1",
      [r](const DiscrepancyReport& d) { return d.k >= 4 * r + 1 && (d.h1 != 0 || d.chi != d.bound); });
  if (mesh.f0() == 0) {
    add("no_interior_vertex", "h1 = gap = 0 when there is no interior vertex",
        [](const DiscrepancyReport& d) { return d.h1 != 0 || d.gap != 0; });
  }
  if (r == 0) {
    const auto V = static_cast<std::int64_t>(mesh.vertex_count());
    const auto E = static_cast<std::int64_t>(mesh.edges().size());
    const auto F = static_cast<std::int64_t>(mesh.face_count());
    add("lagrange_count", "dim C^0_k = V + (k-1)E + C(k-1,2)F for k >= 1", [=](const DiscrepancyReport& d) {
      return d.k >= 1 && d.dim != V + (d.k - 1) * E + choose2(d.k - 1) * F;
    });
  }
  if (has_sy_delta_combinatorics(mesh) && r >= 1) {
    const auto rep = consistency_check(r, std::move(rows));
    for (const auto& c : rep.clauses) out.push_back({r, c.name, c.statement, c.pass, c.offending});
  }
  return out;
}

}  // namespace splinedim

namespace splinedim {

std::pair<int, int> parse_int_range(std::string_view text) {
  auto parse_one = [text](std::string_view part) {
    int value = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc() || ptr != end || value < 0) {
      throw std::invalid_argument("bad integer or range '" + std::string(text) + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_one(text);
    return {v, v};
  }
  const int a = parse_one(text.substr(0, dots));
  const int b = parse_one(text.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return {a, b};
}

}  // namespace splinedim
