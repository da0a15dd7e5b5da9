#include <argus/geometry.hpp>

#include <algorithm>
#include <cmath>

namespace argus {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_finite(cplx z, const char* what) {
  if (!is_finite(z)) throw invalid_argument(std::string(what) + ": non-finite component");
}
}  // namespace

Region Region::cone(double C) {
  if (!(C > 0.0)) throw invalid_argument("cone slope must be positive");
  Region r;
  r.kind_ = RegionKind::ConeC;
  r.cone_slope_ = C;
  return r;
}

Region Region::cone_infinity() {
  Region r;
  r.kind_ = RegionKind::ConeInfinity;
  return r;
}

Region Region::half_plane(cplx a) {
  if (a == cplx(0.0, 0.0) || !is_finite(a))
    throw invalid_argument("half-plane coefficient must be a nonzero finite complex number");
  Region r;
  r.kind_ = RegionKind::HalfPlane;
  r.half_plane_a_ = a;
  return r;
}

Region Region::upper_half_disc() {
  Region r;
  r.kind_ = RegionKind::UpperHalfDisc;
  return r;
}

Region Region::upper_half_plane() {
  Region r;
  r.kind_ = RegionKind::UpperHalfPlane;
  return r;
}

Region Region::slit_plane(bool include_origin) {
  Region r;
  r.kind_ = RegionKind::SlitPlane;
  r.include_origin_ = include_origin;
  return r;
}

bool Region::contains(cplx z, double tol) const {
  if (!is_finite(z)) return false;
  const double re = z.real();
  const double im = z.imag();
  switch (kind_) {
    case RegionKind::ConeC:
      return std::abs(im) <= cone_slope_ * std::abs(re) + tol;
    case RegionKind::ConeInfinity:
      return std::abs(re) > tol || std::abs(z) <= tol;
    case RegionKind::HalfPlane:
      return (half_plane_a_ * z).real() >= -tol;
    case RegionKind::UpperHalfDisc:
      return std::abs(z) <= 1.0 + tol && im >= -tol;
    case RegionKind::UpperHalfPlane:
      return im >= -tol;
    case RegionKind::SlitPlane: {
      if (std::abs(z) <= tol) return include_origin_;
      const bool on_slit = std::abs(re) <= tol && im > tol;
      return !on_slit;
    }
  }
  return false;
}

double Region::margin(cplx z) const {
  switch (kind_) {
    case RegionKind::ConeC:
      return cone_slope_ * std::abs(z.real()) - std::abs(z.imag());
    case RegionKind::ConeInfinity:
      return std::abs(z.real());
    case RegionKind::HalfPlane:
      return (half_plane_a_ * z).real();
    default:
      throw unsupported_region("margin defined only for cones and half-planes");
  }
}

bool region_contains(const Region& region, cplx z, double tol) {
  return region.contains(z, tol);
}

cplx PathPiece::point(double t) const {
  switch (kind) {
    case PieceKind::UpperSemicircle: {
      const double theta = orientation > 0 ? kPi * t : kPi * (1.0 - t);
      return center + radius * cplx(std::cos(theta), std::sin(theta));
    }
    case PieceKind::FullCircle: {
      const double theta = 2.0 * kPi * (orientation > 0 ? t : 1.0 - t);
      return center + radius * cplx(std::cos(theta), std::sin(theta));
    }
    case PieceKind::LineSegment:
      return from + t * (to - from);
  }
  return {};
}

cplx PathPiece::tangent(double t) const {
  switch (kind) {
    case PieceKind::UpperSemicircle: {
      const double theta = orientation > 0 ? kPi * t : kPi * (1.0 - t);
      const cplx dir(-std::sin(theta), std::cos(theta));
      return static_cast<double>(orientation) * kPi * radius * dir;
    }
    case PieceKind::FullCircle: {
      const double theta = 2.0 * kPi * (orientation > 0 ? t : 1.0 - t);
      const cplx dir(-std::sin(theta), std::cos(theta));
      return static_cast<double>(orientation) * 2.0 * kPi * radius * dir;
    }
    case PieceKind::LineSegment:
      return to - from;
  }
  return {};
}

double PathPiece::length() const {
  switch (kind) {
    case PieceKind::UpperSemicircle:
      return kPi * radius;
    case PieceKind::FullCircle:
      return 2.0 * kPi * radius;
    case PieceKind::LineSegment:
      return std::abs(to - from);
  }
  return 0.0;
}

PathSpec PathSpec::upper_semicircle(cplx center, double radius, int orientation) {
  PathSpec p;
  p.append_semicircle(center, radius, orientation);
  return p;
}

PathSpec PathSpec::segment(cplx from, cplx to) {
  PathSpec p;
  p.append_segment(from, to);
  return p;
}

PathSpec PathSpec::full_circle(cplx center, double radius, int orientation) {
  PathSpec p;
  PathPiece piece;
  piece.kind = PieceKind::FullCircle;
  piece.center = center;
  piece.radius = radius;
  piece.orientation = orientation;
  p.append(piece);
  return p;
}

PathSpec& PathSpec::append(PathPiece piece) {
  require_finite(piece.kind == PieceKind::LineSegment ? piece.from : piece.center, "path piece");
  if (piece.kind == PieceKind::LineSegment) {
    require_finite(piece.to, "path piece");
  } else if (!(piece.radius > 0.0) || !std::isfinite(piece.radius)) {
    throw invalid_argument("circular piece requires radius > 0");
  }
  if (!(piece.length() > 0.0)) throw invalid_argument("path piece must have positive length");
  if (piece.orientation != 1 && piece.orientation != -1)
    throw invalid_argument("orientation must be +1 or -1");
  pieces_.push_back(piece);
  return *this;
}

PathSpec& PathSpec::append_semicircle(cplx center, double radius, int orientation) {
  PathPiece piece;
  piece.kind = PieceKind::UpperSemicircle;
  piece.center = center;
  piece.radius = radius;
  piece.orientation = orientation;
  return append(piece);
}

PathSpec& PathSpec::append_segment(cplx from, cplx to) {
  PathPiece piece;
  piece.kind = PieceKind::LineSegment;
  piece.from = from;
  piece.to = to;
  return append(piece);
}

PathSpec& PathSpec::mark_closed() {
  if (pieces_.empty()) throw invalid_argument("cannot close an empty path");
  if (std::abs(start() - end()) > 1e-12 * std::max(diameter(), 1e-300))
    throw invalid_argument("closed path must have matching start and end points");
  closed_ = true;
  return *this;
}

PathSpec PathSpec::reversed() const {
  PathSpec out;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    PathPiece piece = *it;
    if (piece.kind == PieceKind::LineSegment) {
      std::swap(piece.from, piece.to);
    } else {
      piece.orientation = -piece.orientation;
    }
    out.pieces_.push_back(piece);
  }
  out.closed_ = closed_;
  return out;
}

cplx PathSpec::start() const {
  if (pieces_.empty()) throw invalid_argument("empty path has no start");
  return pieces_.front().start();
}

cplx PathSpec::end() const {
  if (pieces_.empty()) throw invalid_argument("empty path has no end");
  return pieces_.back().end();
}

double PathSpec::diameter() const {
  double d = 0.0;
  for (const auto& a : pieces_) {
    for (const auto& b : pieces_) {
      d = std::max(d, std::abs(a.start() - b.start()));
      d = std::max(d, std::abs(a.start() - b.end()));
      d = std::max(d, std::abs(a.end() - b.end()));
    }
    if (a.kind != PieceKind::LineSegment) d = std::max(d, 2.0 * a.radius);
  }
  return d;
}

std::vector<PathSample> sample_path(const PathSpec& path, int n) {
  if (n < 2) throw invalid_argument("sample_path requires n >= 2 per piece");
  if (path.empty()) return {};
  std::vector<PathSample> out;
  const auto& pieces = path.pieces();
  const double m = static_cast<double>(pieces.size());
  out.reserve(pieces.size() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (int k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) / (n - 1);
      const double global = (static_cast<double>(i) + t) / m;
      out.push_back({global, pieces[i].point(t), pieces[i].tangent(t)});
    }
  }
  return out;
}

ZeroPlacement classify_placement(cplx location, double tol) {
  if (std::abs(location.imag()) <= tol) return ZeroPlacement::BoundaryDiameter;
  if (location.imag() > 0.0) return ZeroPlacement::Interior;
  throw invalid_argument("zero location lies below the diameter");
}

}  // namespace argus
