#pragma once

// Structured result of one CLI command: parameters, results, oracle
// comparisons with provenance, and wall-clock timings.  Renders as aligned
// text or JSON; exit status is nonzero iff any comparison failed.

#include <chrono>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace nsemi {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct CheckRow {
  std::string name;
  std::string expected;
  std::string computed;
  std::string provenance;  // formula | brute-force | cross-check
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<CheckRow> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  void param(const std::string& k, const std::string& v) { parameters.push_back({k, v}); }
  void result(const std::string& k, const std::string& v) { results.push_back({k, v}); }
  void timing(const std::string& k, double ms) { timings_ms.push_back({k, ms}); }

  void check(const std::string& name, const std::string& expected, const std::string& computed,
             const std::string& provenance) {
    checks.push_back({name, expected, computed, provenance, expected == computed});
  }
  void check_true(const std::string& name, bool ok, const std::string& provenance,
                  const std::string& detail = "") {
    checks.push_back({name, "pass", ok ? "pass" : (detail.empty() ? "fail" : detail), provenance,
                      ok});
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int exit_code() const { return all_passed() ? 0 : 1; }

  std::string text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
    if (!results.empty()) {
      os << "results:\n";
      for (const auto& [k, v] : results) os << "  " << k << " = " << v << "\n";
    }
    if (!checks.empty()) {
      os << "checks:\n";
      size_t fails = 0;
      for (const auto& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.provenance
           << "): expected " << c.expected << ", computed " << c.computed << "\n";
        if (!c.pass) ++fails;
      }
      os << "checks failed: " << fails << " of " << checks.size() << "\n";
    }
    if (!timings_ms.empty()) {
      os << "timings:\n";
      for (const auto& [k, v] : timings_ms)
        os << "  " << k << " = " << std::fixed << std::setprecision(1) << v << " ms\n";
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["parameters"] = nlohmann::json::object();
    for (const auto& [k, v] : parameters) doc["parameters"][k] = v;
    doc["results"] = nlohmann::json::object();
    for (const auto& [k, v] : results) doc["results"][k] = v;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      doc["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"provenance", c.provenance},
                               {"pass", c.pass}});
    doc["timings_ms"] = nlohmann::json::object();
    for (const auto& [k, v] : timings_ms) doc["timings_ms"][k] = v;
    doc["all_passed"] = all_passed();
    return doc;
  }
};

}  // namespace nsemi
