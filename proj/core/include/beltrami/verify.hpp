#pragma once

#include <string>
#include <vector>

namespace beltrami {

struct CheckResult {
  std::string name;
  std::string detail;
  bool pass = false;
};

// One group per acceptance criterion, numbered 1-12; `fields` names the
// catalog entries a group exercises (scope filter for targeted runs).
struct CheckGroup {
  int criterion = 0;
  std::string name;
  std::vector<std::string> fields;
  std::vector<CheckResult> checks;

  bool passed() const;
};

std::vector<CheckGroup> run_all_checks();

// Groups exercising one catalog entry; throws std::invalid_argument for
// names outside the catalog. May be empty for entries no criterion covers.
std::vector<CheckGroup> run_checks_for(const std::string& field);

bool all_passed(const std::vector<CheckGroup>& groups);

std::string checks_json(const std::vector<CheckGroup>& groups);

}  // namespace beltrami
