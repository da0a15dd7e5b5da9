#include <doctest.h>

#include <cmath>

#include <argus/cusp.hpp>

using namespace argus;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("profile construction validates the cusp shape") {
  CHECK_THROWS_AS(CuspProfile(1, {1.0}, 0.5), invalid_argument);
  CHECK_THROWS_AS(CuspProfile(2, {}, 0.5), invalid_argument);
  CHECK_THROWS_AS(CuspProfile(2, {0.0, 1.0}, 0.5), leading_coefficient_zero);
  CHECK_THROWS_AS(CuspProfile(2, {1.0}, 1.5, 1.0), invalid_argument);
  CHECK_THROWS_AS(CuspProfile(2, {1.0, -3.0}, 0.5), alpha_nonpositive);

  const CuspProfile p(2, {2.0, 1.0}, 0.5);
  CHECK(p.alpha(0.1) == doctest::Approx(0.01 * 2.1).epsilon(1e-14));
  CHECK(p.leading_exponent() == 2);
  CHECK(p.endpoint() == 0.5);
}

TEST_CASE("monomial envelopes match the elementary antiderivative") {
  // For alpha = a_N x^N the integral is explicit:
  // F(t) = exp(-pi/(N a_N) (t^-N - a^-N)).
  struct Case {
    int N;
    double aN, a, t;
  };
  for (const Case& c : {Case{2, 1.0, 0.5, 0.1}, Case{2, 3.0, 1.0, 0.2}, Case{3, 0.5, 0.4, 0.05},
                        Case{5, 2.0, 0.9, 0.3}}) {
    const CuspProfile p = CuspProfile::monomial(c.N, c.aN, c.a);
    const double exact = std::exp(-kPi / (c.N * c.aN) *
                                  (std::pow(c.t, -c.N) - std::pow(c.a, -c.N)));
    CHECK(warschawski_envelope(p, c.t) == doctest::Approx(exact).epsilon(1e-9));
  }
  const CuspProfile p = CuspProfile::monomial(2, 1.0, 0.5);
  CHECK(warschawski_envelope(p, 0.5) == 1.0);
  CHECK_THROWS_AS(warschawski_envelope(p, 0.6), invalid_argument);
  CHECK_THROWS_AS(warschawski_envelope(p, 0.0), invalid_argument);
}

TEST_CASE("exponent coefficients against hand-expanded profiles") {
  const auto mono = kaiser_lehner_coeffs(CuspProfile::monomial(4, 2.0, 0.5));
  REQUIRE(mono.size() == 4);
  CHECK(mono[0] == doctest::Approx(kPi / 8.0).epsilon(1e-14));
  for (std::size_t k = 1; k < mono.size(); ++k) CHECK(std::abs(mono[k]) < 1e-15);

  const auto quad = kaiser_lehner_coeffs(CuspProfile(2, {2.0, 1.0}, 0.5));
  REQUIRE(quad.size() == 2);
  CHECK(quad[0] == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(quad[1] == doctest::Approx(-kPi / 4.0).epsilon(1e-14));

  const auto cubic = kaiser_lehner_coeffs(CuspProfile(3, {1.0, 0.0, 2.0}, 0.5));
  REQUIRE(cubic.size() == 3);
  CHECK(cubic[0] == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  CHECK(std::abs(cubic[1]) < 1e-15);
  CHECK(cubic[2] == doctest::Approx(-2.0 * kPi).epsilon(1e-14));
}

TEST_CASE("leading exponent coefficient reproduces the monomial envelope") {
  const CuspProfile p = CuspProfile::monomial(2, 4.0, 0.7);
  const auto c = kaiser_lehner_coeffs(p);
  for (double t : {0.05, 0.1, 0.3}) {
    const double predicted = std::exp(-c[0] * (1.0 / (t * t) - 1.0 / (0.7 * 0.7)));
    CHECK(warschawski_envelope(p, t) == doctest::Approx(predicted).epsilon(1e-9));
  }
}

TEST_CASE("generalized-Hoelder falsification check") {
  const FHolderModulus mod{[](double x) { return std::sqrt(x); }, "sqrt"};
  auto u = [](cplx z) { return z; };
  std::vector<std::pair<cplx, cplx>> pairs;
  for (int i = 1; i <= 20; ++i) {
    const cplx z(0.1 * i, 0.0);
    pairs.emplace_back(z, z + cplx(0.01, 0.0));
  }
  pairs.emplace_back(cplx(0.5, 0.5), cplx(0.5, 0.5));  // zero step, skipped
  const FHolderCheckResult ok = fholder_check(u, mod, pairs, 0.2);
  CHECK(ok.ok);
  CHECK(ok.sup_estimate == doctest::Approx(0.1).epsilon(1e-12));
  const FHolderCheckResult bad = fholder_check(u, mod, pairs, 0.05);
  CHECK(!bad.ok);
  CHECK(bad.threshold == 0.05);
}
