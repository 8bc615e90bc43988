#pragma once

#include <string>
#include <vector>

namespace swtwist {

struct CheckResult {
  std::string name;
  std::string anchor;  // the statement being checked, in words
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string name, std::string anchor, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(anchor), passed, std::move(detail)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
};

}  // namespace swtwist
