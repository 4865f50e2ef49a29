#include "commulab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace commulab {

void CheckReport::metric(const std::string& name, std::int64_t value) {
  metrics.emplace_back(name, value);
}

void CheckReport::metric(const std::string& name, const std::string& value) {
  metrics.emplace_back(name, value);
}

std::int64_t CheckReport::metric_int(const std::string& name) const {
  for (const auto& [k, v] : metrics)
    if (k == name && std::holds_alternative<std::int64_t>(v))
      return std::get<std::int64_t>(v);
  throw std::out_of_range("missing integer metric '" + name + "'");
}

const char* CheckReport::status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["status"] = status_name(status);
  if (!detail.empty()) j["detail"] = detail;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metrics) {
    if (std::holds_alternative<std::int64_t>(v))
      m[k] = std::get<std::int64_t>(v);
    else
      m[k] = std::get<std::string>(v);
  }
  j["metrics"] = std::move(m);
  j["seed"] = seed;
  if (!artifacts.is_null()) j["artifacts"] = artifacts;
  if (include_timings && elapsed_ms >= 0) j["ms"] = elapsed_ms;
  return j;
}

CheckReport make_pass(const std::string& id) {
  CheckReport r;
  r.check_id = id;
  r.status = CheckReport::Status::Pass;
  return r;
}

CheckReport make_fail(const std::string& id, const std::string& detail) {
  CheckReport r;
  r.check_id = id;
  r.status = CheckReport::Status::Fail;
  r.detail = detail;
  return r;
}

CheckReport make_inconclusive(const std::string& id,
                              const std::string& reason) {
  CheckReport r;
  r.check_id = id;
  r.status = CheckReport::Status::Inconclusive;
  r.detail = reason;
  return r;
}

std::string emit_report_json(const std::vector<CheckReport>& reports,
                             bool include_timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json(include_timings));
  j["reports"] = std::move(arr);
  return j.dump(2) + "\n";
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string emit_report_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check_id,status,detail,seed,metric,value\n";
  for (const auto& r : reports) {
    std::string prefix = csv_escape(r.check_id) + "," +
                         CheckReport::status_name(r.status) + "," +
                         csv_escape(r.detail) + "," + std::to_string(r.seed);
    if (r.metrics.empty()) {
      os << prefix << ",,\n";
      continue;
    }
    for (const auto& [k, v] : r.metrics) {
      os << prefix << "," << csv_escape(k) << ",";
      if (std::holds_alternative<std::int64_t>(v))
        os << std::get<std::int64_t>(v);
      else
        os << csv_escape(std::get<std::string>(v));
      os << "\n";
    }
  }
  return os.str();
}

int aggregate_exit_code(const std::vector<CheckReport>& reports) {
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == CheckReport::Status::Fail) any_fail = true;
    if (r.status == CheckReport::Status::Inconclusive) any_inconclusive = true;
  }
  if (any_fail) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

}  // namespace commulab
