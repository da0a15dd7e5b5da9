#pragma once

#include <optional>
#include <vector>

#include <argus/types.hpp>

namespace argus {

// Default tolerance for classifying a zero as lying on the real diameter.
inline constexpr double kBoundaryTol = 1e-10;

enum class RegionKind {
  ConeC,           // {|Im w| <= C |Re w|}
  ConeInfinity,    // {Re w != 0} u {0}
  HalfPlane,       // {Re(a w) >= 0}
  UpperHalfDisc,   // {|w| <= 1, Im w >= 0}
  UpperHalfPlane,  // {Im w >= 0}
  SlitPlane,       // C minus the open positive imaginary axis
};

/// One of the supported regions of the complex plane. Membership is a
/// total predicate; boundary comparisons are slackened by a caller tolerance.
class Region {
 public:
  static Region cone(double C);
  static Region cone_infinity();
  static Region half_plane(cplx a);
  static Region upper_half_disc();
  static Region upper_half_plane();
  /// The slit plane C \ {iy : y > 0}. `include_origin` selects whether 0
  /// belongs to the region (both readings are used by callers).
  static Region slit_plane(bool include_origin = true);

  RegionKind kind() const { return kind_; }
  double cone_slope() const { return cone_slope_; }
  cplx half_plane_coefficient() const { return half_plane_a_; }
  bool includes_origin() const { return include_origin_; }

  bool contains(cplx z, double tol = 0.0) const;

  /// Signed margin used by cone certification: positive means strictly
  /// inside. Defined for ConeC (C|Re| - |Im|) and ConeInfinity (|Re|).
  double margin(cplx z) const;

 private:
  Region() = default;
  RegionKind kind_ = RegionKind::UpperHalfDisc;
  double cone_slope_ = 0.0;
  cplx half_plane_a_{1.0, 0.0};
  bool include_origin_ = true;
};

bool region_contains(const Region& region, cplx z, double tol = 0.0);

enum class PieceKind { UpperSemicircle, LineSegment, FullCircle };

/// A primitive smooth piece parametrized on [0,1]. Orientation +1 is
/// counterclockwise for circular pieces.
struct PathPiece {
  PieceKind kind = PieceKind::LineSegment;
  cplx center{0.0, 0.0};  // circular pieces
  double radius = 0.0;
  cplx from{0.0, 0.0};  // line segments
  cplx to{1.0, 0.0};
  int orientation = +1;

  cplx point(double t) const;
  cplx tangent(double t) const;
  cplx start() const { return point(0.0); }
  cplx end() const { return point(1.0); }
  double length() const;
};

/// An immutable chain of primitive pieces. Composites store the pieces
/// themselves, never sampled geometry, so quadrature can refine at will.
class PathSpec {
 public:
  PathSpec() = default;

  static PathSpec upper_semicircle(cplx center, double radius, int orientation = +1);
  static PathSpec segment(cplx from, cplx to);
  static PathSpec full_circle(cplx center, double radius, int orientation = +1);

  /// Appends a piece, validating positive length. Returns *this for chaining.
  PathSpec& append(PathPiece piece);
  PathSpec& append_semicircle(cplx center, double radius, int orientation = +1);
  PathSpec& append_segment(cplx from, cplx to);

  /// Marks the path closed; throws unless start and end agree to within
  /// 1e-12 of the path diameter.
  PathSpec& mark_closed();

  PathSpec reversed() const;

  const std::vector<PathPiece>& pieces() const { return pieces_; }
  bool closed() const { return closed_; }
  bool empty() const { return pieces_.empty(); }

  cplx start() const;
  cplx end() const;
  /// Max pairwise extent of piece endpoints; scale for closedness checks.
  double diameter() const;

 private:
  std::vector<PathPiece> pieces_;
  bool closed_ = false;
};

struct PathSample {
  double parameter;  // global parameter in [0,1], monotone
  cplx point;
  cplx tangent;
};

/// Samples n points per primitive piece with exact analytic tangents.
/// Piece boundaries are duplicated so both one-sided tangents appear.
std::vector<PathSample> sample_path(const PathSpec& path, int n);

enum class ZeroPlacement {
  Interior,
  BoundaryDiameter,
  Exterior,  // below the diameter; shapes a fixture but never enters a ledger
};

struct ZeroRecord {
  cplx location{0.0, 0.0};
  int multiplicity = 1;
  ZeroPlacement placement = ZeroPlacement::Interior;
};

/// Classifies a zero location against the diameter, using kBoundaryTol.
ZeroPlacement classify_placement(cplx location, double tol = kBoundaryTol);

}  // namespace argus
