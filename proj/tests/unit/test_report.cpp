#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include <argus/report.hpp>

using namespace argus;

TEST_CASE("formatted doubles round-trip exactly") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 0.45015815807855303}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("CSV serialization carries full precision") {
  IndexProfile prof;
  prof.radii = {0.25, 0.04};
  prof.values = {0.45015815807855303, 1.1253953951963826};
  prof.errors = {1e-12, 2e-12};
  const std::string csv = profile_to_csv(prof);
  CHECK(csv.substr(0, 9) == "r,I,err\n0");
  CHECK(csv.find(format_double(prof.values[0])) != std::string::npos);
  CHECK(csv.find(format_double(prof.values[1])) != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("JSON profile carries jump annotations") {
  IndexProfile prof;
  prof.radii = {0.6, 0.4};
  prof.values = {1.0, 0.0};
  prof.errors = {0.0, 0.0};
  prof.jumps.push_back({0.5, 0.0, 1.0});
  const nlohmann::json j = profile_to_json(prof);
  CHECK(j.at("radii").size() == 2);
  REQUIRE(j.at("jumps").size() == 1);
  CHECK(j.at("jumps")[0].at("radius") == 0.5);
  CHECK(j.at("jumps")[0].at("right_limit") == 1.0);
}

TEST_CASE("report envelope aggregates pass flags") {
  CheckRecord good;
  good.name = "winding-exactness";
  good.paper_anchor = "index-definition";
  good.measured = 0.5;
  good.expected = 0.5;
  good.tolerance = 1e-9;
  good.pass = true;
  CheckRecord bad = good;
  bad.name = "jump-law";
  bad.pass = false;

  nlohmann::json j = report_json("verify-all", 1e-8, {good, bad});
  CHECK(j.at("schema") == 1);
  CHECK(j.at("command") == "verify-all");
  CHECK(j.at("tolerance") == 1e-8);
  CHECK(j.at("all_pass") == false);
  REQUIRE(j.at("checks").size() == 2);
  CHECK(j.at("checks")[0].at("name") == "winding-exactness");
  CHECK(j.at("checks")[0].at("paper_anchor") == "index-definition");
  CHECK(j.at("checks")[1].at("pass") == false);
  CHECK(j.contains("timestamp"));

  nlohmann::json all_good = report_json("verify-all", 1e-8, {good});
  CHECK(all_good.at("all_pass") == true);

  // Deterministic modulo the timestamp.
  nlohmann::json again = report_json("verify-all", 1e-8, {good, bad});
  j.erase("timestamp");
  again.erase("timestamp");
  CHECK(j == again);
}
