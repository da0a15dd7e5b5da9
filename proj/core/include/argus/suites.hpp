#pragma once

#include <string>
#include <vector>

#include <argus/factory.hpp>
#include <argus/function.hpp>
#include <argus/report.hpp>

namespace argus::suites {

/// exp(-e^{i pi/4}/sqrt(z)) as a FunctionHandle with its analytic derivative.
FunctionHandle builtin_counterexample();

/// The assembled half-plane example: envelope times the cusp-sequence
/// Blaschke product composed with the Cayley map.
FunctionHandle builtin_cusp_example_product(double eps = 1.0);

FunctionHandle builtin_by_name(const std::string& name);

struct NamedFixture {
  std::string name;
  FactorySpec spec;
};

/// Jump-law suite: interior simple, boundary simple x2, boundary double,
/// mixed radius, higher multiplicities, exp cofactors. At least 10 entries.
std::vector<NamedFixture> jump_fixtures();

/// Fixtures real-valued on (-1,1); their boundary image lies in every slit
/// plane, so the oscillation bound applies between zero radii.
std::vector<NamedFixture> conjugate_symmetric_fixtures();

/// Zeros on radii {0.5, 0.3, 0.2}: boundary pair, interior point (with its
/// mirror below the axis), boundary pair.
FactorySpec three_radius_fixture();

/// Runs every verification check at the given numeric tolerance and returns
/// the records in fixed suite order. `inject_failure` = "jump-law" adds a
/// deliberately corrupted ledger check (negative control).
std::vector<CheckRecord> run_all(double tolerance, const std::string& inject_failure = "");

}  // namespace argus::suites
