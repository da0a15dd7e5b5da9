#include <argus/report.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace argus {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string profile_to_csv(const IndexProfile& profile) {
  std::string out = "r,I,err\n";
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    out += format_double(profile.radii[i]);
    out += ',';
    out += format_double(profile.values[i]);
    out += ',';
    out += format_double(i < profile.errors.size() ? profile.errors[i] : 0.0);
    out += '\n';
  }
  return out;
}

nlohmann::json profile_to_json(const IndexProfile& profile) {
  nlohmann::json j;
  j["radii"] = profile.radii;
  j["values"] = profile.values;
  j["errors"] = profile.errors;
  j["jumps"] = nlohmann::json::array();
  for (const auto& jump : profile.jumps) {
    j["jumps"].push_back({{"radius", jump.radius},
                          {"left_limit", jump.left_limit},
                          {"right_limit", jump.right_limit}});
  }
  return j;
}

nlohmann::json check_to_json(const CheckRecord& check) {
  return {{"name", check.name},         {"paper_anchor", check.paper_anchor},
          {"measured", check.measured}, {"expected", check.expected},
          {"tolerance", check.tolerance}, {"pass", check.pass}};
}

nlohmann::json report_json(const std::string& command, double tolerance,
                           const std::vector<CheckRecord>& checks) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["tolerance"] = tolerance;
  j["checks"] = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    j["checks"].push_back(check_to_json(c));
    all = all && c.pass;
  }
  j["all_pass"] = all;
  j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  return j;
}

}  // namespace argus
