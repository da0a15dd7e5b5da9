#include <doctest.h>

#include <cmath>

#include <argus/boundary.hpp>
#include <argus/suites.hpp>

using namespace argus;

namespace {

FunctionHandle monomial(int k) {
  FunctionHandle f;
  f.evaluator = [k](cplx z) {
    cplx acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
  };
  return f;
}

PathSpec vertical_approach() { return PathSpec::segment({0.0, 1.0}, {0.0, 0.0}); }

}  // namespace

TEST_CASE("finite vanishing orders are recovered from secant slopes") {
  for (int k : {1, 2, 3, 5}) {
    const VanishingReport rep = vanishing_order(monomial(k), {0.0, 0.0}, vertical_approach(), 8);
    CHECK(rep.kind == VanishingReport::Kind::OrderK);
    CHECK(rep.order == k);
    CHECK(rep.deepest_reliable_scale > 0.0);
    CHECK(!rep.slope_trace.empty());
  }
}

TEST_CASE("a nonvanishing function classifies as such") {
  FunctionHandle f;
  f.evaluator = [](cplx z) { return z + 2.0; };
  const VanishingReport rep = vanishing_order(f, {0.0, 0.0}, vertical_approach(), 8);
  CHECK(rep.kind == VanishingReport::Kind::Nonvanishing);
  CHECK(rep.order == 0);
}

TEST_CASE("super-polynomial decay reports infinite order up to the budget") {
  const FunctionHandle f = suites::builtin_counterexample();
  const VanishingReport rep = vanishing_order(f, {0.0, 0.0}, vertical_approach(), 8);
  CHECK(rep.kind == VanishingReport::Kind::InfiniteOrderUpTo);
  CHECK(rep.order == 8);
  // An absurd budget cannot be exhausted before |f| underflows.
  CHECK_THROWS_AS(vanishing_order(f, {0.0, 0.0}, vertical_approach(), 1000), underflow_dominated);
}

TEST_CASE("approach-path preconditions") {
  const FunctionHandle f = monomial(1);
  const PathSpec misses = PathSpec::segment({0.0, 1.0}, {0.0, 0.5});
  CHECK_THROWS_AS(vanishing_order(f, {0.0, 0.0}, misses, 8), invalid_argument);
  const PathSpec too_short = PathSpec::segment({0.0, 0.01}, {0.0, 0.0});
  CHECK_THROWS_AS(vanishing_order(f, {0.0, 0.0}, too_short, 8), invalid_argument);
  CHECK_THROWS_AS(vanishing_order(f, {0.0, 0.0}, vertical_approach(), 0), invalid_argument);
}

TEST_CASE("infinitesimal comparison accepts super-polynomial against linear") {
  const FunctionHandle f = suites::builtin_counterexample();
  const InfinitesimalResult res =
      infinitesimal_wrt(f, monomial(1), {0.0, 0.0}, vertical_approach(), 8);
  CHECK(res.ok);
  CHECK(res.first_failing_n == 0);
  REQUIRE(res.trace.size() == 3);
  CHECK(res.trace[0].log_ratio > res.trace[1].log_ratio);
  CHECK(res.trace[1].log_ratio > res.trace[2].log_ratio);
}

TEST_CASE("infinitesimal comparison fails in the wrong direction") {
  const InfinitesimalResult res =
      infinitesimal_wrt(monomial(1), monomial(2), {0.0, 0.0}, vertical_approach(), 1);
  CHECK(!res.ok);
  CHECK(res.first_failing_n == 1);
  REQUIRE(res.trace.size() == 3);
}

TEST_CASE("vanishing comparison function is rejected") {
  FunctionHandle g;
  g.evaluator = [](cplx) { return cplx(0.0, 0.0); };
  CHECK_THROWS_AS(infinitesimal_wrt(monomial(1), g, {0.0, 0.0}, vertical_approach(), 1),
                  g_vanishes);
}

TEST_CASE("cone certification over a real interval") {
  FunctionHandle f;
  f.evaluator = [](cplx z) { return z * z + 2.0; };
  const ConeCertificate ok = cone_certify(f, -1.0, 1.0, Region::cone(1.0), 400);
  CHECK(ok.ok);
  CHECK(ok.worst_margin > 0.0);
  CHECK(!ok.witness.has_value());

  FunctionHandle g;
  g.evaluator = [](cplx z) { return cplx(0.0, 1.0) * z; };
  const ConeCertificate bad = cone_certify(g, -1.0, 1.0, Region::cone_infinity(), 400);
  CHECK(!bad.ok);
  CHECK(bad.worst_margin <= 0.0);
  REQUIRE(bad.witness.has_value());
  CHECK(std::abs(bad.witness->imag()) < 1e-15);

  CHECK_THROWS_AS(cone_certify(f, 1.0, -1.0, Region::cone(1.0), 400), invalid_argument);
  CHECK_THROWS_AS(cone_certify(f, -1.0, 1.0, Region::cone(1.0), 1), invalid_argument);
}
