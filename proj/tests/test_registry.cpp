#include <doctest.h>

#include <set>

#include "commulab/registry.hpp"

using namespace commulab;

TEST_CASE("registry catalog") {
  const auto& entries = registry_entries();
  CHECK(entries.size() == 25);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK(!e.claim.empty());
    ids.insert(e.id);
  }
  CHECK(ids.size() == entries.size());
  for (const char* id : {"T1", "T14", "C1", "C5", "D1", "D6"})
    CHECK(ids.count(id) == 1);
  // T9 and D6 are outside the quick profile, everything else inside
  for (const auto& e : entries)
    CHECK(e.in_quick_profile == (e.id != "T9" && e.id != "D6"));
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_check("T99"), std::invalid_argument);
}

TEST_CASE("the nilindex counterexample check") {
  CheckReport r = run_check("C4");
  CHECK(r.status == CheckReport::Status::Pass);
  CHECK(r.metric_int("nilindex") == 3);
  CHECK(r.metric_int("n") == 2);
  CHECK(r.metric_int("executed_assertions") > 0);
}

TEST_CASE("dimension checks return the expected integers") {
  CheckReport d1 = run_check("D1");
  CHECK(d1.status == CheckReport::Status::Pass);
  CHECK(d1.metric_int("Y_2_2") == 1);
  CHECK(d1.metric_int("Y_3_2") == 2);
  CHECK(d1.metric_int("Y_3_3") == 2);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  CheckReport a = run_check("T4");
  CheckReport b = run_check("T4");
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CheckConfig cfg;
  cfg.seed_override = 12345;
  CheckReport c = run_check("T4", cfg);
  CheckReport d = run_check("T4", cfg);
  CHECK(c.seed == 12345);
  CHECK(c.to_json(false).dump() == d.to_json(false).dump());
}

TEST_CASE("report serialization") {
  CheckReport r = run_check("C5");
  std::vector<CheckReport> reports{r};
  std::string json = emit_report_json(reports);
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["reports"].size() == 1);
  CHECK(parsed["reports"][0]["check_id"] == "C5");
  CHECK(parsed["reports"][0]["status"] == "PASS");
  CHECK(parsed["reports"][0].count("ms") == 0);  // timings off by default

  std::string csv = emit_report_csv(reports);
  CHECK(csv.rfind("check_id,status,detail,seed,metric,value\n", 0) == 0);
  CHECK(csv.find("C5,PASS") != std::string::npos);

  CHECK(aggregate_exit_code(reports) == 0);
  reports.push_back(make_inconclusive("X", "why"));
  CHECK(aggregate_exit_code(reports) == 2);
  reports.push_back(make_fail("Y", "bad"));
  CHECK(aggregate_exit_code(reports) == 1);
}

TEST_CASE("ring overrides reach the checks") {
  CheckConfig cfg;
  cfg.ring_override = "Zmod:9";
  CheckReport r = run_check("T13", cfg);
  CHECK(r.status == CheckReport::Status::Pass);
  CHECK(r.metric_int("solutions") == 9);
  // an override violating the hypotheses is INCONCLUSIVE, never FAIL and
  // never a silently wrong PASS: over Z/8, 2 is a zero-divisor
  CheckConfig bad;
  bad.ring_override = "Zmod:8";
  CheckReport rb = run_check("T13", bad);
  CHECK(rb.status == CheckReport::Status::Inconclusive);
  CHECK(rb.detail.find("zero-divisor") != std::string::npos);
}
