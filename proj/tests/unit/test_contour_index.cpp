#include <doctest.h>

#include <cmath>
#include <complex>

#include <argus/contour_index.hpp>
#include <argus/factory.hpp>
#include <argus/suites.hpp>

using namespace argus;

namespace {

FunctionHandle power_fn(int k) {
  FunctionHandle f;
  f.evaluator = [k](cplx z) {
    cplx acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
  };
  f.derivative = [k](cplx z) {
    cplx acc(static_cast<double>(k), 0.0);
    for (int i = 0; i < k - 1; ++i) acc *= z;
    return acc;
  };
  return f;
}

}  // namespace

TEST_CASE("circle winds once, independently of scale") {
  for (double r : {1e-3, 1.0, 1e3}) {
    const PathSpec circle = PathSpec::full_circle({0.0, 0.0}, r);
    CHECK(index_of_curve(circle, 1e-10).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("reversal flips the index sign") {
  const PathSpec circle = PathSpec::full_circle({0.2, 0.1}, 2.0);
  const double fwd = index_of_curve(circle, 1e-10).value;
  const double bwd = index_of_curve(circle.reversed(), 1e-10).value;
  CHECK(fwd == doctest::Approx(-bwd).epsilon(1e-12));
}

TEST_CASE("concatenation adds phase increments") {
  const double half = index_of_curve(PathSpec::upper_semicircle({0.0, 0.0}, 1.0), 1e-10).value;
  CHECK(half == doctest::Approx(0.5).epsilon(1e-12));
  const double full = index_of_curve(PathSpec::full_circle({0.0, 0.0}, 1.0), 1e-10).value;
  CHECK(2.0 * half == doctest::Approx(full).epsilon(1e-12));
}

TEST_CASE("curve grazing the origin is rejected") {
  const PathSpec circle = PathSpec::full_circle({1.0, 0.0}, 1.0 - 1e-16);
  CHECK_THROWS_AS(index_of_curve(circle, 1e-8), origin_too_close);
}

TEST_CASE("powers over the semicircle index at k/2") {
  const PathSpec gamma = PathSpec::upper_semicircle({0.0, 0.0}, 1.0);
  for (int k = 1; k <= 6; ++k) {
    const double got = index_of_image(power_fn(k), gamma, 1e-9).value;
    CHECK(std::abs(got - 0.5 * k) < 1e-9);
    const double rev = index_of_image(power_fn(k), gamma.reversed(), 1e-9).value;
    CHECK(std::abs(rev + 0.5 * k) < 1e-9);
  }
}

TEST_CASE("argument-principle count over a closed circle") {
  FactorySpec spec;
  spec.zero_plan = {{{0.3, 0.0}, 1, ZeroPlacement::BoundaryDiameter},
                    {{0.0, 0.4}, 2, ZeroPlacement::Interior}};
  const FunctionHandle f = build(spec);
  const PathSpec circle = PathSpec::full_circle({0.0, 0.0}, 0.8).mark_closed();
  CHECK(closed_path_zero_count(f, circle, 1e-9) == doctest::Approx(3.0).epsilon(1e-12));

  const PathSpec open = PathSpec::upper_semicircle({0.0, 0.0}, 0.8);
  CHECK_THROWS_AS(closed_path_zero_count(f, open, 1e-9), invalid_argument);
}

TEST_CASE("zero on the path is detected") {
  FactorySpec spec;
  spec.zero_plan = {{{0.5, 0.0}, 1, ZeroPlacement::BoundaryDiameter}};
  const FunctionHandle f = build(spec);
  const PathSpec gamma = PathSpec::upper_semicircle({0.0, 0.0}, 0.5);
  CHECK_THROWS_AS(index_of_image(f, gamma, 1e-8), zero_on_path);
}

TEST_CASE("a double zero grazing the path does not alias a full turn") {
  // Regression: the image makes a 2*pi twist within one sampling interval,
  // invisible to wrapped phases; modulus-driven refinement must resolve it.
  FactorySpec spec;
  spec.zero_plan = {{std::polar(0.5, 1.0), 2, ZeroPlacement::Interior}};
  const FunctionHandle f = build(spec);
  ImageIndexOptions opts;
  opts.cross_check = false;
  const double left =
      index_of_image(f, PathSpec::upper_semicircle({0.0, 0.0}, 0.4999), 1e-8, opts).value;
  const double right =
      index_of_image(f, PathSpec::upper_semicircle({0.0, 0.0}, 0.5001), 1e-8, opts).value;
  CHECK(left == doctest::Approx(-0.499924336852).epsilon(1e-9));
  CHECK(right == doctest::Approx(1.499924351983).epsilon(1e-9));
}

TEST_CASE("a lying derivative trips the cross-check") {
  FunctionHandle f;
  f.evaluator = [](cplx z) { return z; };
  f.derivative = [](cplx) { return cplx(2.0, 0.0); };  // wrong on purpose
  const PathSpec gamma = PathSpec::upper_semicircle({0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(index_of_image(f, gamma, 1e-9), quadrature_mismatch);
}

TEST_CASE("image index bounds per target region") {
  const FunctionHandle f = suites::builtin_counterexample();
  const IndexResult res = index_of_image(f, PathSpec::upper_semicircle({0.0, 0.0}, 0.25), 1e-9);
  CHECK(index_bound_check(Region::cone_infinity(), res));
  CHECK(index_bound_check(Region::slit_plane(), res));
  CHECK_THROWS_AS(index_bound_check(Region::upper_half_disc(), res), unsupported_region);
}

TEST_CASE("phase track is monotone in the parameter and lands on the index") {
  ImageIndexOptions opts;
  opts.keep_phase_track = true;
  const IndexResult res =
      index_of_image(power_fn(3), PathSpec::upper_semicircle({0.0, 0.0}, 1.0), 1e-9, opts);
  REQUIRE(!res.phase_track.empty());
  CHECK(res.phase_track.back().second == doctest::Approx(1.5).epsilon(1e-9));
}
