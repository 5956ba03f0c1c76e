#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splinedim/analytics.hpp"
#include "splinedim/chain_complex.hpp"

namespace splinedim {

inline constexpr const char* kEngineVersion = "0.1.0";

struct ClauseResult {
  int r = 0;
  std::string name;
  std::string statement;
  bool pass = true;
  std::vector<int> offending;

  friend bool operator==(const ClauseResult&, const ClauseResult&) = default;
};

struct AnalyticsRow {
  int r = 0;
  std::string theorem_bound;  // canonical rational
  std::int64_t remark_max_degree = 0;
  std::optional<int> j;
  std::optional<bool> root_exceeds_bound;

  friend bool operator==(const AnalyticsRow&, const AnalyticsRow&) = default;
};

struct ReportRow {
  int k = 0;
  std::int64_t dim = 0;
  std::int64_t bound = 0;
  std::int64_t chi = 0;
  std::int64_t h1 = 0;
  std::int64_t gap = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

ReportRow to_row(const DiscrepancyReport& d);

/// One CLI invocation. Serialized with sorted keys; elapsed time only when set.
struct RunRecord {
  std::string command;
  std::string mesh;
  int r = 0;
  int r_to = 0;
  int k_from = 0;
  int k_to = 0;
  std::vector<ReportRow> rows;
  std::optional<int> max_nonzero_h1;
  std::vector<ClauseResult> clauses;
  std::vector<AnalyticsRow> analytics;
  std::string engine_version = kEngineVersion;
  std::optional<double> elapsed_seconds;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string to_json(const RunRecord& rec);
/// Throws std::runtime_error on schema mismatch.
RunRecord parse_run_record(const std::string& text);

/// The three combinatorial facts of the bundled sy_delta complex: three
/// interior vertices with three slopes each, two totally interior edges
/// sharing a vertex. The max-degree clauses are only checked on such meshes.
bool has_sy_delta_combinatorics(const Triangulation& mesh);

/// Every clause `check` evaluates for one r, from a sweep over k = 0..4r+3.
std::vector<ClauseResult> run_checks(const Triangulation& mesh, int r, const SplineOptions& opts = {});

/// "N" or "A..B" with 0 <= A <= B. Throws std::invalid_argument.
std::pair<int, int> parse_int_range(std::string_view text);

inline constexpr const char* kCsvHeader = "k,dim,P,chi,h1,gap";
/// check and analytics get their own columns; other commands use kCsvHeader.
std::string to_csv(const RunRecord& rec);
std::string to_text(const RunRecord& rec);

}  // namespace splinedim
