// splinedim: spline space dimensions, Schumaker's bound and h1 from the command line.
#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "splinedim/analytics.hpp"
#include "splinedim/chain_complex.hpp"
#include "splinedim/report.hpp"

using namespace splinedim;

namespace {

constexpr int kExitFailedCheck = 3;
constexpr int kExitBadInput = 1;
constexpr int kExitBadFlags = 2;

struct Args {
  std::string mesh;
  std::string r = "1";
  std::string k;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool timing = false;
};

void emit(const RunRecord& rec, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(rec);
  } else if (format == "csv") {
    std::cout << to_csv(rec);
  } else {
    std::cout << to_text(rec);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimensions of planar spline spaces"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub, bool needs_mesh, bool needs_k) {
    auto* mesh = sub->add_option("--mesh", args.mesh, "bundled mesh name or path to a mesh file");
    if (needs_mesh) mesh->required();
    auto* k = sub->add_option("--k", args.k, "degree: INT or A..B");
    if (needs_k) k->required();
    sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--seed", args.seed, "prime selection seed for modular rank");
    sub->add_flag("--timing", args.timing, "include elapsed time in the output");
  };
  auto* dim = app.add_subcommand("dim", "dim C^r_k");
  dim->add_option("--r", args.r, "smoothness")->required();
  add_common(dim, true, true);
  auto* bound = app.add_subcommand("bound", "Schumaker's lower bound P(r,k)");
  bound->add_option("--r", args.r, "smoothness")->required();
  add_common(bound, true, true);
  auto* sweep = app.add_subcommand("sweep", "dim, P, chi, h1 and gap over a degree range");
  sweep->add_option("--r", args.r, "smoothness")->required();
  add_common(sweep, true, true);
  auto* check = app.add_subcommand("check", "evaluate every applicable clause for r in a range");
  check->add_option("--r", args.r, "smoothness: INT or A..B")->required();
  add_common(check, true, false);
  auto* analytics = app.add_subcommand("analytics", "closed-form bounds and the root comparison");
  analytics->add_option("--r", args.r, "smoothness: INT or A..B")->required();
  add_common(analytics, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }

  std::pair<int, int> r_range;
  std::pair<int, int> k_range{0, 0};
  try {
    r_range = parse_int_range(args.r);
    if (!args.k.empty()) k_range = parse_int_range(args.k);
    if (r_range.first != r_range.second && !(check->parsed() || analytics->parsed())) {
      throw std::invalid_argument("--r takes a single value for this command");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }

  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.command = app.get_subcommands().front()->get_name();
  rec.mesh = args.mesh;
  rec.r = r_range.first;
  rec.r_to = r_range.second;
  rec.k_from = k_range.first;
  rec.k_to = k_range.second;
  const SplineOptions opts{args.seed, true};

  try {
    if (analytics->parsed()) {
      for (int r = r_range.first; r <= r_range.second; ++r) {
        const auto a = bound_analytics(r);
        AnalyticsRow row{r, to_string(a.theorem_bound), a.remark_value, a.j, std::nullopt};
        if (a.j) row.root_exceeds_bound = larger_root_bound(*a.j).root_exceeds_bound;
        rec.analytics.push_back(row);
      }
    } else {
      const Triangulation mesh = load_mesh(args.mesh);
      if (check->parsed()) {
        for (int r = r_range.first; r <= r_range.second; ++r) {
          const auto clauses = run_checks(mesh, r, opts);
          rec.clauses.insert(rec.clauses.end(), clauses.begin(), clauses.end());
        }
      } else {
        const auto reports = discrepancy_sweep(mesh, rec.r, k_range.first, k_range.second, opts);
        for (const auto& d : reports) rec.rows.push_back(to_row(d));
        if (sweep->parsed()) rec.max_nonzero_h1 = max_nonzero_h1(reports);
      }
    }
  } catch (const MeshError& e) {
    std::cerr << (e.kind() == MeshError::Kind::parse ? "parse error: " : "validation error: ") << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  if (args.timing) {
    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(rec, args.format);
  for (const auto& c : rec.clauses) {
    if (!c.pass) return kExitFailedCheck;
  }
  return 0;
}
