#include <argus/contour_index.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <argus/quadrature.hpp>

namespace argus {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxDepth = 30;
constexpr int kInitialIntervals = 32;

double wrap_pi(double a) {
  while (a > kPi) a -= kTwoPi;
  while (a <= -kPi) a += kTwoPi;
  return a;
}

struct UnwrapStats {
  double total = 0.0;
  double residual = 0.0;  // accumulated mid-point inconsistency
  std::size_t steps = 0;
  int depth = 0;
  // Smallest sampled modulus relative to its immediate neighbors. A global
  // min/max ratio would misfire on functions whose modulus legitimately
  // spans many orders of magnitude along the path.
  double worst_local_ratio = std::numeric_limits<double>::infinity();
  bool image_semantics = false;  // zero_on_path vs origin_too_close
  std::vector<std::pair<double, double>>* track = nullptr;
};

void note_local_ratio(UnwrapStats& stats, double mod, double neighbor_scale) {
  const double ratio = neighbor_scale > 0.0 ? mod / neighbor_scale : 0.0;
  stats.worst_local_ratio = std::min(stats.worst_local_ratio, ratio);
}

[[noreturn]] void throw_vanishing(const UnwrapStats& stats) {
  if (stats.image_semantics)
    throw zero_on_path("function vanishes on the path at sampled resolution");
  throw origin_too_close("curve passes too close to the origin");
}

struct Node {
  double t;
  double arg;
  double mod;
};

// Accepts the step [n0,n1] once the one-step argument change is below pi/2
// and agrees with the sum over the two half steps; otherwise bisects.
void unwrap_segment(const std::function<cplx(double)>& w, const Node& n0, const Node& n1,
                    int depth, UnwrapStats& stats) {
  const double d = wrap_pi(n1.arg - n0.arg);
  if (depth < kMaxDepth) {
    const double tm = 0.5 * (n0.t + n1.t);
    const cplx wm = w(tm);
    const Node m{tm, std::arg(wm), std::abs(wm)};
    note_local_ratio(stats, m.mod, std::max(n0.mod, n1.mod));
    if (stats.worst_local_ratio < 1e-13) throw_vanishing(stats);
    const double d1 = wrap_pi(m.arg - n0.arg);
    const double d2 = wrap_pi(n1.arg - m.arg);
    const double mismatch = std::abs(d1 + d2 - d);
    // A full 2*pi twist between samples is invisible to wrapped phases, but
    // it always comes with a sharp modulus dip (the image grazes the
    // origin), so deviation from log-linear modulus also forces a split.
    const double log_dev =
        std::abs(std::log(m.mod) - 0.5 * (std::log(n0.mod) + std::log(n1.mod)));
    // Either test alone can be aliased by a dip placed adversarially within
    // the step; together they cannot (a graze close enough to hide from the
    // midpoint is exposed by the endpoint ratio, and vice versa).
    const double log_ratio = std::abs(std::log(n1.mod) - std::log(n0.mod));
    // Phase advancing by almost exactly 2*pi*n per half step defeats both
    // wrapped-phase consistency and the modulus guards (the image can spin
    // at a modulus-flat point). A finite-difference phase speed at the
    // midpoint, taken at 1/64 of the step, resolves such spins unless the
    // speed is another 64x faster still.
    const double hh = (n1.t - n0.t) / 64.0;
    const double speed_est =
        std::abs(wrap_pi(std::arg(w(tm + hh)) - std::arg(w(tm - hh)))) * 32.0;
    if (std::abs(d) >= kPi / 2.0 || std::abs(d1) >= kPi / 2.0 || std::abs(d2) >= kPi / 2.0 ||
        speed_est >= kPi / 2.0 || mismatch > 1e-9 || log_dev > 0.7 || log_ratio > 0.7) {
      stats.depth = std::max(stats.depth, depth + 1);
      unwrap_segment(w, n0, m, depth + 1, stats);
      unwrap_segment(w, m, n1, depth + 1, stats);
      return;
    }
    stats.residual += mismatch;
  } else if (std::abs(d) >= kPi / 2.0) {
    // Still turning by a quarter-circle at the deepest subdivision: the
    // image is pinched against the origin.
    throw_vanishing(stats);
  }
  stats.total += d;
  stats.steps += 1;
  if (stats.track) stats.track->emplace_back(n1.t, stats.total);
}

// Unwraps one parametrized piece over [0,1], adding into stats.
void unwrap_piece(const std::function<cplx(double)>& w, UnwrapStats& stats) {
  std::vector<Node> grid(kInitialIntervals + 1);
  for (int i = 0; i <= kInitialIntervals; ++i) {
    const double t = static_cast<double>(i) / kInitialIntervals;
    const cplx v = w(t);
    grid[i] = {t, std::arg(v), std::abs(v)};
  }
  for (int i = 0; i <= kInitialIntervals; ++i) {
    const double left = i > 0 ? grid[i - 1].mod : 0.0;
    const double right = i < kInitialIntervals ? grid[i + 1].mod : 0.0;
    note_local_ratio(stats, grid[i].mod, std::max(left, right));
  }
  if (stats.worst_local_ratio < 1e-13) throw_vanishing(stats);
  for (int i = 0; i < kInitialIntervals; ++i) unwrap_segment(w, grid[i], grid[i + 1], 0, stats);
}

IndexResult unwrap_path(const PathSpec& path,
                        const std::function<cplx(std::size_t, double)>& image, double tol,
                        bool near_origin_is_zero_on_path, bool keep_track) {
  if (path.empty()) throw invalid_argument("index of an empty path");
  UnwrapStats stats;
  stats.image_semantics = near_origin_is_zero_on_path;
  std::vector<std::pair<double, double>> track;
  if (keep_track) stats.track = &track;
  for (std::size_t i = 0; i < path.pieces().size(); ++i) {
    auto w = [&, i](double t) { return image(i, t); };
    unwrap_piece(w, stats);
  }
  IndexResult res;
  res.value = stats.total / kTwoPi;
  res.estimated_error =
      (stats.residual + static_cast<double>(stats.steps) * 2.5e-16 * kPi) / kTwoPi;
  res.refinement_depth = stats.depth;
  if (keep_track) {
    for (auto& p : track) p.second /= kTwoPi;
    res.phase_track = std::move(track);
  }
  if (res.estimated_error > tol)
    throw refinement_exhausted("cannot certify requested index tolerance");
  return res;
}

}  // namespace

IndexResult index_of_curve(const PathSpec& path, double tol) {
  if (!(tol > 0.0)) throw invalid_argument("tolerance must be positive");
  auto image = [&path](std::size_t piece, double t) { return path.pieces()[piece].point(t); };
  return unwrap_path(path, image, tol, /*near_origin_is_zero_on_path=*/false, false);
}

IndexResult index_of_image(const FunctionHandle& f, const PathSpec& path, double tol,
                           const ImageIndexOptions& options) {
  if (!(tol > 0.0)) throw invalid_argument("tolerance must be positive");
  auto image = [&](std::size_t piece, double t) { return f(path.pieces()[piece].point(t)); };
  IndexResult res =
      unwrap_path(path, image, tol, /*near_origin_is_zero_on_path=*/true, options.keep_phase_track);

  const bool derivative_usable = f.has_analytic_derivative() || options.allow_fd_derivative;
  if (options.cross_check && derivative_usable) {
    double imag_integral = 0.0;
    double quad_err = 0.0;
    const double piece_tol = tol * kTwoPi / static_cast<double>(path.pieces().size());
    for (const auto& piece : path.pieces()) {
      auto integrand = [&](double t) {
        const cplx z = piece.point(t);
        const cplx val = f(z);
        return (f.deriv(z) / val * piece.tangent(t)).imag();
      };
      QuadResult q;
      try {
        q = integrate_gk15(integrand, 0.0, 1.0, tol, piece_tol);
      } catch (const quadrature_failed&) {
        throw refinement_exhausted("f'/f contour quadrature did not converge");
      }
      imag_integral += q.value;
      quad_err += q.abs_error;
    }
    const double value_b = imag_integral / kTwoPi;
    if (std::abs(res.value - value_b) > 5.0 * tol + quad_err / kTwoPi)
      throw quadrature_mismatch("phase unwrapping and f'/f quadrature disagree");
  }
  return res;
}

double closed_path_zero_count(const FunctionHandle& f, const PathSpec& closed_path, double tol) {
  if (!closed_path.closed()) throw invalid_argument("zero counting requires a certified closed path");
  const IndexResult res = index_of_image(f, closed_path, tol);
  const double nearest = std::round(res.value);
  if (std::abs(res.value - nearest) > tol)
    throw non_integer_result("closed-path index deviates from the nearest integer");
  return res.value;
}

bool index_bound_check(const Region& image_region, const IndexResult& index) {
  switch (image_region.kind()) {
    case RegionKind::ConeInfinity:
      return index.value < 0.5;
    case RegionKind::SlitPlane:
      return index.value < 1.0;
    default:
      throw unsupported_region("no index bound stated for this region");
  }
}

}  // namespace argus
