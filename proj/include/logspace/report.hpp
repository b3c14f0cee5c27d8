#pragma once

#include <chrono>
#include <cstddef>
#include <ctime>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace logspace {

// One verified claim inside an experiment.  `anchor` states the checked
// property in mathematical terms; `values` holds the computed evidence and
// `threshold` the decision constants, so a report is auditable on its own.
struct CheckRecord {
  std::string id;
  std::string anchor;
  nlohmann::json values;
  nlohmann::json threshold;
  bool pass = false;
  bool informational = false;  // evidence only; never fails the experiment
};

struct ExperimentReport {
  std::string experiment;
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  std::string timestamp;  // the only field exempt from reproducibility

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.informational && !c.pass) return false;
    }
    return true;
  }

  void add(CheckRecord record) { checks.push_back(std::move(record)); }

  nlohmann::json to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json item{{"id", c.id},
                          {"anchor", c.anchor},
                          {"values", c.values},
                          {"threshold", c.threshold},
                          {"pass", c.pass}};
      if (c.informational) item["informational"] = true;
      checks_json.push_back(std::move(item));
    }
    return nlohmann::json{{"schema_version", 1},
                          {"experiment", experiment},
                          {"config", config},
                          {"timestamp", timestamp},
                          {"checks", checks_json},
                          {"pass", pass()}};
  }

  // Spreadsheet flattening: one row per check, evidence serialised inline.
  std::string to_csv() const {
    std::ostringstream out;
    out << "experiment,check_id,pass,informational,anchor,values,threshold\n";
    const auto quote = [](std::string s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
      }
      q += "\"";
      return q;
    };
    for (const auto& c : checks) {
      out << experiment << ',' << c.id << ',' << (c.pass ? "true" : "false") << ','
          << (c.informational ? "true" : "false") << ',' << quote(c.anchor) << ','
          << quote(c.values.dump()) << ',' << quote(c.threshold.dump()) << '\n';
    }
    return out.str();
  }
};

inline std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace logspace
