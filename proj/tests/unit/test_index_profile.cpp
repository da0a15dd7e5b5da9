#include <doctest.h>

#include <cmath>

#include <argus/factory.hpp>
#include <argus/index_profile.hpp>
#include <argus/suites.hpp>

using namespace argus;

namespace {

constexpr double kPi = 3.14159265358979323846;

FunctionHandle fixture(const char* name, const std::vector<suites::NamedFixture>& pool) {
  for (const auto& fx : pool)
    if (fx.name == name) return build(fx.spec);
  throw std::runtime_error("fixture not found");
}

}  // namespace

TEST_CASE("ledger groups zeros by radius and skips mirror factors") {
  const FactorySpec spec = suites::three_radius_fixture();
  const ZeroLedger ledger = ledger_from_zeros(spec.zero_plan);
  REQUIRE(ledger.size() == 3);
  CHECK(ledger[0].radius == doctest::Approx(0.5));
  CHECK(ledger[0].interior_mult == 0);
  CHECK(ledger[0].boundary_mult == 2);
  CHECK(ledger[0].boundary_distinct == 2);
  CHECK(ledger[1].radius == doctest::Approx(0.3));
  CHECK(ledger[1].interior_mult == 1);
  CHECK(ledger[1].boundary_mult == 0);
  CHECK(ledger[2].radius == doctest::Approx(0.2));
  CHECK(ledger[2].boundary_mult == 2);
}

TEST_CASE("profile sorts the grid and reproduces the step at a zero radius") {
  const FunctionHandle f = fixture("boundary-pair", suites::jump_fixtures());
  const IndexProfile prof = profile(f, {0.4, 0.6}, 1e-9);
  REQUIRE(prof.radii.size() == 2);
  CHECK(prof.radii[0] == doctest::Approx(0.6));
  CHECK(prof.values[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(prof.values[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
}

TEST_CASE("profile rejects grid radii inside the exclusion margin") {
  const FunctionHandle f = fixture("boundary-pair", suites::jump_fixtures());
  CHECK_THROWS_AS(profile(f, {0.50005}, 1e-9, 1e-3), zero_on_path);
  CHECK_THROWS_AS(profile(f, {}, 1e-9), invalid_argument);
  CHECK_THROWS_AS(profile(f, {-0.1}, 1e-9), invalid_argument);
}

TEST_CASE("one-sided limits recover the jump law per fixture") {
  const double delta0 = 1e-4;
  for (const auto& fx : suites::jump_fixtures()) {
    CAPTURE(fx.name);
    const FunctionHandle f = build(fx.spec);
    const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
    REQUIRE(!ledger.empty());
    const JumpResult res = jump_at(f, ledger.front(), delta0, 1e-8);
    CHECK(std::abs(res.residual) < 1e-3);
    CHECK(res.jump == doctest::Approx(res.right - res.left));
  }
}

TEST_CASE("jump probing rejects bad bands") {
  const FunctionHandle f = fixture("boundary-pair", suites::jump_fixtures());
  const ZeroLedgerEntry entry{0.5, 0, 2, 2};
  CHECK_THROWS_AS(jump_at(f, entry, 0.2, 1e-8), invalid_argument);

  FactorySpec crowded;
  crowded.zero_plan = {{{0.5, 0.0}, 1, ZeroPlacement::BoundaryDiameter},
                       {{0.5002, 0.0}, 1, ZeroPlacement::BoundaryDiameter}};
  CHECK_THROWS_AS(jump_at(build(crowded), entry, 1e-3, 1e-8), zero_off_radius);
}

TEST_CASE("telescoping identity closes over three ledger radii") {
  const FunctionHandle f = build(suites::three_radius_fixture());
  const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
  REQUIRE(ledger.size() == 3);
  CHECK(std::abs(summation_relation(f, ledger, 2, 1e-4, 1e-8)) < 1e-3);
  CHECK_THROWS_AS(summation_relation(f, ledger, 3, 1e-4, 1e-8), invalid_argument);
}

TEST_CASE("segment-index partial sums respect the region bound") {
  const FunctionHandle f = build(suites::three_radius_fixture());
  const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
  CHECK(s_bound_check(f, ledger, 2, Region::slit_plane(), 1e-4, 1e-8));
  CHECK(s_bound_check(f, ledger, 2, Region::cone_infinity(), 1e-4, 1e-8));
  CHECK_THROWS_AS(s_bound_check(f, ledger, 2, Region::upper_half_disc(), 1e-4, 1e-8),
                  unsupported_region);
}

TEST_CASE("radial-derivative identity holds off the zero radii") {
  FactorySpec spec;
  spec.cofactor = CofactorKind::ExpPoly;
  spec.exp_poly = {{0.0, 0.0}, {1.0, 0.0}};  // exp(z), zero free
  const FunctionHandle f = build(spec);
  CHECK(std::abs(radial_identity_check(f, 0.7, 1e-9)) < 1e-5);

  const FunctionHandle g = fixture("boundary-single", suites::jump_fixtures());
  CHECK(std::abs(radial_identity_check(g, 0.3, 1e-9)) < 1e-5);
  CHECK_THROWS_AS(radial_identity_check(g, 0.5, 1e-9), zero_near_radius);
}

TEST_CASE("log-averaged index of a constant profile is the constant") {
  IndexProfile prof;
  for (int i = 0; i <= 64; ++i) {
    prof.radii.push_back(std::pow(0.01, i / 64.0));
    prof.values.push_back(0.75);
    prof.errors.push_back(0.0);
  }
  double err = 0.0;
  CHECK(J_profile(prof, prof.radii.back(), &err) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(err < 1e-12);
  CHECK_THROWS_AS(J_profile(prof, 0.5, nullptr), grid_too_coarse);

  IndexProfile low = prof;
  for (auto& r : low.radii) r *= 0.5;
  CHECK_THROWS_AS(J_profile(low, low.radii.back(), nullptr), grid_too_coarse);
}

TEST_CASE("counterexample index profile matches the closed form") {
  const FunctionHandle f = suites::builtin_counterexample();
  const IndexProfile prof = profile(f, {0.25, 0.04}, 1e-8);
  const double c = 1.0 / (std::sqrt(2.0) * kPi);
  CHECK(prof.values[0] == doctest::Approx(c / std::sqrt(0.25)).epsilon(1e-6));
  CHECK(prof.values[1] == doctest::Approx(c / std::sqrt(0.04)).epsilon(1e-6));
}
