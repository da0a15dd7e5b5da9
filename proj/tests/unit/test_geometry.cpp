#include <doctest.h>

#include <cmath>

#include <argus/geometry.hpp>

using namespace argus;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cone membership and margin") {
  const Region cone = Region::cone(1.0);
  CHECK(cone.contains({1.0, 0.5}));
  CHECK(cone.contains({-1.0, 1.0}));
  CHECK(!cone.contains({0.1, 0.5}));
  CHECK(cone.contains({0.0, 0.0}));
  CHECK(cone.margin({2.0, 0.5}) == doctest::Approx(1.5));
  CHECK(cone.margin({0.1, 0.5}) < 0.0);
}

TEST_CASE("line-complement region includes the origin and excludes the axis") {
  const Region g = Region::cone_infinity();
  CHECK(g.contains({0.0, 0.0}));
  CHECK(g.contains({1e-3, 5.0}));
  CHECK(!g.contains({0.0, 1.0}));
  CHECK(!g.contains({0.0, -0.2}));
  CHECK(g.margin({0.25, 9.0}) == doctest::Approx(0.25));
}

TEST_CASE("slit plane supports both origin conventions") {
  CHECK(Region::slit_plane(true).contains({0.0, 0.0}));
  CHECK(!Region::slit_plane(false).contains({0.0, 0.0}));
  for (bool with_origin : {true, false}) {
    const Region s = Region::slit_plane(with_origin);
    CHECK(!s.contains({0.0, 0.5}));
    CHECK(s.contains({0.0, -0.5}));
    CHECK(s.contains({-3.0, 7.0}));
  }
}

TEST_CASE("half plane rotates with its coefficient") {
  const Region h = Region::half_plane({0.0, -1.0});  // Re(-i w) = Im w >= 0
  CHECK(h.contains({5.0, 0.2}));
  CHECK(!h.contains({5.0, -0.2}));
}

TEST_CASE("semicircle piece endpoints and tangent") {
  PathPiece p;
  p.kind = PieceKind::UpperSemicircle;
  p.center = {0.0, 0.0};
  p.radius = 2.0;
  CHECK(std::abs(p.start() - cplx(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.end() - cplx(-2.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.point(0.5) - cplx(0.0, 2.0)) < 1e-14);
  // Tangent at the top points in the -x direction with speed pi*r.
  CHECK(std::abs(p.tangent(0.5) - cplx(-2.0 * kPi, 0.0)) < 1e-13);
}

TEST_CASE("reversed path traverses the same points backwards") {
  PathSpec path = PathSpec::upper_semicircle({0.1, 0.0}, 1.5);
  path.append_segment(path.end(), {3.0, 1.0});
  const PathSpec rev = path.reversed();
  CHECK(std::abs(rev.start() - path.end()) < 1e-15);
  CHECK(std::abs(rev.end() - path.start()) < 1e-15);
  const auto samples = sample_path(path, 7);
  const auto rsamples = sample_path(rev, 7);
  const std::size_t n = samples.size();
  REQUIRE(rsamples.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(samples[i].point - rsamples[n - 1 - i].point) < 1e-14);
    CHECK(std::abs(samples[i].tangent + rsamples[n - 1 - i].tangent) < 1e-12);
  }
}

TEST_CASE("closing requires matching endpoints") {
  PathSpec open = PathSpec::segment({0.0, 0.0}, {1.0, 0.0});
  CHECK_THROWS_AS(open.mark_closed(), invalid_argument);
  PathSpec circle = PathSpec::full_circle({0.3, 0.2}, 0.7);
  CHECK_NOTHROW(circle.mark_closed());
  CHECK(circle.closed());
  // Semicircle plus its diameter closes.
  PathSpec half = PathSpec::upper_semicircle({0.0, 0.0}, 1.0);
  half.append_segment({-1.0, 0.0}, {1.0, 0.0});
  CHECK_NOTHROW(half.mark_closed());
}

TEST_CASE("path diameter reflects the extent of the pieces") {
  PathSpec path = PathSpec::segment({0.0, 0.0}, {3.0, 4.0});
  CHECK(path.diameter() == doctest::Approx(5.0));
}

TEST_CASE("sampling duplicates piece boundaries with one-sided tangents") {
  PathSpec path = PathSpec::upper_semicircle({0.0, 0.0}, 1.0);
  path.append_segment({-1.0, 0.0}, {1.0, 0.0});
  const auto samples = sample_path(path, 5);
  CHECK(samples.size() == 10);  // 5 per piece, corner appears twice
  CHECK(std::abs(samples[4].point - samples[5].point) < 1e-15);
  CHECK(std::abs(samples[4].tangent - samples[5].tangent) > 0.1);
}

TEST_CASE("zero placement classification against the diameter") {
  CHECK(classify_placement({0.5, 0.0}) == ZeroPlacement::BoundaryDiameter);
  CHECK(classify_placement({0.5, 1e-12}) == ZeroPlacement::BoundaryDiameter);
  CHECK(classify_placement({0.5, 1e-6}) == ZeroPlacement::Interior);
}
