#include <doctest.h>

#include <set>

#include "fgcert/verify.hpp"

using namespace fgcert;

TEST_CASE("manifest ids are unique and belong to known suites") {
  const auto& names = suite_names();
  std::set<std::string> ids;
  for (const auto& c : checks_manifest().at("checks")) {
    CHECK(ids.insert(c.at("id").get<std::string>()).second);
    const auto suite = c.at("suite").get<std::string>();
    CHECK(std::find(names.begin(), names.end(), suite) != names.end());
    CHECK(c.at("expected").is_string());
  }
}

TEST_CASE("report schema") {
  const auto report = run_suite("section2");
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"toolVersion", "timestamp", "suite", "seed", "checks", "summary"});
  const auto& first = j.at("checks").at(0);
  keys.clear();
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "paperRef", "status", "expected", "computed", "elapsedMillis"});
  const auto& s = j.at("summary");
  CHECK(s.at("total").get<std::size_t>() == report.checks.size());
  CHECK(s.at("passed").get<std::size_t>() + s.at("failed").get<std::size_t>() + s.at("skipped").get<std::size_t>() ==
        report.checks.size());
  for (const auto& c : report.checks) CHECK((c.status == CheckStatus::pass) == (c.expected == c.computed));
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument); }

TEST_CASE("seeded suites are deterministic") {
  const auto a = to_json(run_suite("properties", {42, false})).dump();
  const auto b = to_json(run_suite("properties", {42, false})).dump();
  CHECK(a == b);
}
