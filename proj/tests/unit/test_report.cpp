#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "splinedim/report.hpp"

using namespace splinedim;

namespace {

RunRecord sample() {
  RunRecord rec;
  rec.command = "sweep";
  rec.mesh = "morgan_scott";
  rec.r = 1;
  rec.r_to = 1;
  rec.k_from = 0;
  rec.k_to = 4;
  const auto rows = discrepancy_sweep(load_mesh("morgan_scott"), 1, 0, 4);
  for (const auto& d : rows) rec.rows.push_back(to_row(d));
  rec.max_nonzero_h1 = max_nonzero_h1(rows);
  return rec;
}

std::vector<std::int64_t> numbers_in(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string token;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && token.empty())) {
      token += c;
    } else {
      if (!token.empty() && token != "-") out.push_back(std::stoll(token));
      token.clear();
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("cli_report") {
  TEST_CASE("json round trip") {
    auto rec = sample();
    rec.clauses.push_back({1, "lower_bound", "dim >= P", false, {2, 3}});
    rec.analytics.push_back({3, "73/10", 7, 1, true});
    rec.analytics.push_back({2, "51/10", 5, std::nullopt, std::nullopt});
    CHECK(parse_run_record(to_json(rec)) == rec);
    rec.elapsed_seconds = 0.25;
    CHECK(parse_run_record(to_json(rec)) == rec);
    CHECK_THROWS(parse_run_record("{}"));
    CHECK_THROWS(parse_run_record("not json"));
  }

  TEST_CASE("json keys are sorted and timing is opt-in") {
    const auto text = to_json(sample());
    CHECK(text.find("elapsed") == std::string::npos);
    const char* keys[] = {"\"analytics\"", "\"clauses\"", "\"command\"", "\"engine_version\"", "\"k_range\"",
                          "\"max_nonzero_h1\"", "\"mesh\"", "\"r\"", "\"r_to\"", "\"rows\""};
    std::size_t last = 0;
    for (const char* k : keys) {
      const auto pos = text.find(k);
      REQUIRE(pos != std::string::npos);
      CHECK(pos >= last);
      last = pos;
    }
    CHECK(text.find("{\n      \"P\": 1,\n      \"chi\": 1,") != std::string::npos);
    CHECK(to_json(sample()) == text);
  }

  TEST_CASE("text, csv and json carry the same numbers") {
    const auto rec = sample();
    const auto csv = to_csv(rec);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    std::vector<std::int64_t> expected;
    for (const auto& row : rec.rows) {
      for (auto v : {static_cast<std::int64_t>(row.k), row.dim, row.bound, row.chi, row.h1, row.gap}) expected.push_back(v);
    }
    CHECK(numbers_in(csv.substr(csv.find('\n'))) == expected);
    const auto text = to_text(rec);
    const auto footer = text.find("max_nonzero_h1:");
    REQUIRE(footer != std::string::npos);
    const auto head = text.find("gap") + 3;
    CHECK(numbers_in(text.substr(head, footer - head)) == expected);
    CHECK(numbers_in(text.substr(footer + 15)) == std::vector<std::int64_t>{*rec.max_nonzero_h1});
    const auto back = parse_run_record(to_json(rec));
    CHECK(back.rows == rec.rows);
  }

  TEST_CASE("range parsing") {
    CHECK(parse_int_range("5") == std::pair{5, 5});
    CHECK(parse_int_range("0..13") == std::pair{0, 13});
    for (const char* bad : {"", "x", "3..", "..3", "4..2", "-1", "1..2..3", "1.5", "2 "}) {
      CHECK_THROWS_AS(parse_int_range(bad), std::invalid_argument);
    }
  }

  TEST_CASE("check clauses") {
    const auto tri = load_mesh("triangle");
    for (int r = 0; r <= 3; ++r) {
      for (const auto& c : run_checks(tri, r)) CHECK_MESSAGE(c.pass, c.name);
    }
    CHECK(has_sy_delta_combinatorics(load_mesh("sy_delta")));
    CHECK(!has_sy_delta_combinatorics(load_mesh("morgan_scott")));
    CHECK(!has_sy_delta_combinatorics(cross_mesh()));
    const auto sy = run_checks(load_mesh("sy_delta"), 2);
    bool found = false;
    for (const auto& c : sy) {
      CHECK_MESSAGE(c.pass, c.name);
      found |= c.name == "max_degree";
    }
    CHECK(found);
    const auto zero = run_checks(load_mesh("morgan_scott"), 0);
    bool lagrange = false;
    for (const auto& c : zero) lagrange |= c.name == "lagrange_count" && c.pass;
    CHECK(lagrange);
  }
}

TEST_SUITE("cli_report") {
  TEST_CASE("csv for check and analytics") {
    RunRecord check;
    check.command = "check";
    check.clauses = {{1, "max_degree", "s", false, {6, 7}}, {1, "vanishing", "s", true, {}}};
    CHECK(to_csv(check) == "r,clause,pass,offending\n1,max_degree,false,6 7\n1,vanishing,true,\n");
    RunRecord an;
    an.command = "analytics";
    an.analytics = {{2, "51/10", 5, std::nullopt, std::nullopt}, {3, "73/10", 7, 1, true}};
    CHECK(to_csv(an) == "r,theorem_bound,remark_max_degree,j,root_exceeds_bound\n2,51/10,5,,\n3,73/10,7,1,true\n");
  }
}
