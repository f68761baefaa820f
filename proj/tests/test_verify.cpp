#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "beltrami/verify.hpp"

namespace {

using namespace beltrami;

const std::vector<CheckGroup>& all_groups() {
  static const std::vector<CheckGroup> groups = run_all_checks();
  return groups;
}

}  // namespace

TEST_CASE("full checklist is green") {
  const auto& groups = all_groups();
  REQUIRE(groups.size() == 12);
  for (size_t i = 0; i < groups.size(); ++i) {
    CAPTURE(groups[i].name);
    CHECK(groups[i].criterion == static_cast<int>(i) + 1);
    CHECK(!groups[i].checks.empty());
    for (const CheckResult& c : groups[i].checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(groups[i].passed());
  }
  CHECK(all_passed(groups));
}

TEST_CASE("group scopes name catalog entries") {
  const auto& groups = all_groups();
  const std::vector<std::vector<std::string>> fields{
      {"V", "W", "I", "V0", "W0", "Y"},
      {"I", "W", "Y"},
      {"V", "W", "V0", "M", "N", "P", "Q"},
      {"V", "V0"},
      {"V", "W"},
      {"V", "Y"},
      {"M"},
      {"B_sasakian", "F_averaged"},
      {"I"},
      {"N", "Q"},
      {"D"},
      {},
  };
  REQUIRE(groups.size() == fields.size());
  for (size_t i = 0; i < groups.size(); ++i) CHECK(groups[i].fields == fields[i]);

  // The ambient-identity suite binds to no entry but still runs checks.
  CHECK(groups.back().fields.empty());
  CHECK(!groups.back().checks.empty());
}

TEST_CASE("targeted runs filter by field") {
  const auto for_i = run_checks_for("I");
  REQUIRE(!for_i.empty());
  std::vector<int> criteria;
  for (const auto& g : for_i) criteria.push_back(g.criterion);
  CHECK(criteria == std::vector<int>{1, 2, 9});
  CHECK(all_passed(for_i));

  // Cataloged but outside every criterion: valid request, empty result.
  CHECK(run_checks_for("ABC").empty());

  CHECK_THROWS_AS(run_checks_for("bogus"), std::invalid_argument);
}

TEST_CASE("json export") {
  const nlohmann::json doc = nlohmann::json::parse(checks_json(all_groups()));
  REQUIRE(doc.contains("groups"));
  REQUIRE(doc.at("groups").size() == 12);
  const auto& first = doc.at("groups").at(0);
  CHECK(first.at("criterion") == 1);
  CHECK(first.at("name") == "curl-eigenfields");
  CHECK(first.at("fields").size() == 6);
  CHECK(first.at("checks").at(0).contains("name"));
  CHECK(first.at("checks").at(0).contains("detail"));
  CHECK(first.at("checks").at(0).at("pass") == true);
}
