#include <doctest.h>

#include <cmath>

#include <argus/quadrature.hpp>

using namespace argus;

TEST_CASE("polynomials are integrated to machine precision") {
  const QuadResult q = integrate_gk15([](double x) { return x * x; }, 0.0, 1.0, 1e-12, 0.0);
  CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrand") {
  const double pi = 3.14159265358979323846;
  const QuadResult q = integrate_gk15([](double x) { return std::sin(x); }, 0.0, pi, 1e-12, 0.0);
  CHECK(std::abs(q.value - 2.0) < 1e-12);
  CHECK(std::abs(q.value - 2.0) <= q.abs_error + 1e-14);
}

TEST_CASE("sharply peaked integrand is found adaptively") {
  // int 1/((x-c)^2 + w^2) dx = (atan((1-c)/w) + atan(c/w))/w
  const double c = 0.3, w = 1e-3;
  const QuadResult q = integrate_gk15(
      [=](double x) { return 1.0 / ((x - c) * (x - c) + w * w); }, 0.0, 1.0, 1e-10, 0.0);
  const double exact = (std::atan((1.0 - c) / w) + std::atan(c / w)) / w;
  CHECK(std::abs(q.value / exact - 1.0) < 1e-9);
  CHECK(q.depth > 3);
}

TEST_CASE("reversed limits flip the sign") {
  const QuadResult fwd = integrate_gk15([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12, 0.0);
  const QuadResult bwd = integrate_gk15([](double x) { return std::exp(x); }, 1.0, 0.0, 1e-12, 0.0);
  CHECK(fwd.value == doctest::Approx(-bwd.value).epsilon(1e-13));
}

TEST_CASE("depth exhaustion raises quadrature_failed") {
  const double c = 0.3, w = 1e-9;
  CHECK_THROWS_AS(integrate_gk15([=](double x) { return 1.0 / ((x - c) * (x - c) + w * w); }, 0.0,
                                 1.0, 1e-12, 0.0, 4),
                  quadrature_failed);
}
