#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <argus/function.hpp>
#include <argus/geometry.hpp>
#include <argus/types.hpp>

namespace argus {

/// Result of a winding-number computation. `value` is the real-valued index
/// Re((1/2pi i) integral dz/z); it is an integer only for closed curves
/// around the origin, and callers must not assume integrality otherwise.
struct IndexResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int refinement_depth = 0;
  std::vector<std::pair<double, double>> phase_track;  // (parameter, unwrapped arg)
};

/// Index of the curve itself with respect to 0, by adaptive phase
/// unwrapping: per-step argument change is forced below pi/2 via bisection
/// (max depth 30). Throws origin_too_close if the sampled curve comes within
/// 1e-13 of its own scale from the origin, refinement_exhausted if the
/// requested tolerance cannot be certified.
IndexResult index_of_curve(const PathSpec& path, double tol);

struct ImageIndexOptions {
  /// Method (b) (the f'/f quadrature cross-check) amplifies differencing
  /// noise, so it is skipped when only the central-difference fallback is
  /// available, unless the caller opts in here.
  bool allow_fd_derivative = false;
  /// Disables method (b) entirely; phase unwrapping remains authoritative.
  bool cross_check = true;
  bool keep_phase_track = false;
};

/// Ind(f o gamma), computed by phase unwrapping and, when a derivative is
/// available, cross-checked against the f'/f contour quadrature.
/// Disagreement beyond 5*tol throws quadrature_mismatch. Throws zero_on_path
/// if a min-modulus scan finds f vanishing on the path.
IndexResult index_of_image(const FunctionHandle& f, const PathSpec& path, double tol,
                           const ImageIndexOptions& options = {});

/// Argument-principle zero count over a certified closed path. Returns the
/// raw real index; it must lie within tol of a nonnegative integer or
/// non_integer_result is thrown. Callers round.
double closed_path_zero_count(const FunctionHandle& f, const PathSpec& closed_path, double tol);

/// True iff the computed index satisfies the region's a-priori bound:
/// 1/2 for the imaginary-axis complement, 1 for the slit plane. Other
/// regions have no stated bound and throw unsupported_region.
bool index_bound_check(const Region& image_region, const IndexResult& index);

}  // namespace argus
