#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <argus/index_profile.hpp>

namespace argus {

/// One verification record in the machine-readable report.
struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double x);

/// CSV with header "r,I,err", comma separator, 17 significant digits.
std::string profile_to_csv(const IndexProfile& profile);

/// JSON object with radii, values, errors, and jump annotations.
nlohmann::json profile_to_json(const IndexProfile& profile);

nlohmann::json check_to_json(const CheckRecord& check);

/// Versioned report envelope ("schema": 1). Deterministic modulo the
/// timestamp field.
nlohmann::json report_json(const std::string& command, double tolerance,
                           const std::vector<CheckRecord>& checks);

}  // namespace argus
