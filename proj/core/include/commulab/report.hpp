#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace commulab {

/// Structured outcome of one verification run. FAIL is reserved for a
/// machine-verified violation of a registered claim; preconditions that do
/// not hold and exhausted budgets are INCONCLUSIVE.
struct CheckReport {
  enum class Status { Pass, Fail, Inconclusive };

  using Metric = std::variant<std::int64_t, std::string>;

  std::string check_id;
  Status status = Status::Inconclusive;
  std::string detail;  // falsification certificate text / inconclusive reason
  std::vector<std::pair<std::string, Metric>> metrics;
  std::uint64_t seed = 0;
  nlohmann::ordered_json artifacts;  // optional matrices, polynomials, ...
  std::int64_t elapsed_ms = -1;      // excluded from deterministic output

  void metric(const std::string& name, std::int64_t value);
  void metric(const std::string& name, const std::string& value);
  std::int64_t metric_int(const std::string& name) const;  // throws if absent

  static const char* status_name(Status s);

  /// Deterministic JSON (schema 1). Timing appears only when requested.
  nlohmann::ordered_json to_json(bool include_timings = false) const;
};

CheckReport make_pass(const std::string& id);
CheckReport make_fail(const std::string& id, const std::string& detail);
CheckReport make_inconclusive(const std::string& id, const std::string& reason);

/// JSON document for a batch of reports: {"schema":1, "reports":[...]}.
std::string emit_report_json(const std::vector<CheckReport>& reports,
                             bool include_timings = false);

/// Long-form CSV, one row per metric: check_id,status,detail,seed,metric,value.
std::string emit_report_csv(const std::vector<CheckReport>& reports);

/// 0 if all PASS, 1 if any FAIL, 2 if any INCONCLUSIVE and no FAIL.
int aggregate_exit_code(const std::vector<CheckReport>& reports);

}  // namespace commulab
