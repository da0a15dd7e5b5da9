#pragma once

#include <vector>

#include <argus/contour_index.hpp>
#include <argus/function.hpp>
#include <argus/types.hpp>

namespace argus {

/// Sampled r -> I(r) data for the upper-semicircle family gamma_r, with
/// discontinuity annotations at zero radii. Radii are strictly decreasing.
struct IndexProfile {
  std::vector<double> radii;
  std::vector<double> values;
  std::vector<double> errors;
  struct Jump {
    double radius;
    double left_limit;
    double right_limit;
  };
  std::vector<Jump> jumps;
};

/// Per-radius zero bookkeeping: interior count with multiplicity, boundary
/// count with multiplicity, boundary count without multiplicity.
struct ZeroLedgerEntry {
  double radius = 0.0;
  int interior_mult = 0;      // kappa(n)
  int boundary_mult = 0;      // kappa~(n)
  int boundary_distinct = 0;  // kappa'(n)
};

using ZeroLedger = std::vector<ZeroLedgerEntry>;

/// Groups declared zeros by modulus (radii merged within kBoundaryTol) into
/// a ledger sorted by strictly decreasing radius.
ZeroLedger ledger_from_zeros(const std::vector<ZeroRecord>& zeros);

/// I(r) over the given grid. Grid radii must stay at least `exclusion` away
/// from every declared zero radius of f.
IndexProfile profile(const FunctionHandle& f, std::vector<double> radii, double tol,
                     double exclusion = 1e-4);

/// One-sided limits of I at a zero radius, realized by Richardson
/// extrapolation over evaluations at r +- {4,2,1}*delta0.
struct JumpResult {
  double left = 0.0;
  double right = 0.0;
  double jump = 0.0;
  double residual = 0.0;  // jump - (kappa + kappa~/2)
};

JumpResult jump_at(const FunctionHandle& f, const ZeroLedgerEntry& entry, double delta0,
                   double tol);

/// s(n): the epsilon -> 0 limit of the two diameter-segment indices between
/// consecutive zero radii, extrapolated over epsilon in {4,2,1}*delta.
/// Throws extrapolation_diverged when the three estimates are not settling.
double segment_limit_index(const FunctionHandle& f, double r_outer, double r_inner, double delta,
                           double tol);

/// Residual of the telescoping identity over the first N ledger radii:
/// (I(r_1^+) - I(r_{N+1}^+)) - (sum kappa + 1/2 sum kappa~ - sum s).
/// The ledger must cover radii r_1 > ... > r_{N+1}.
double summation_relation(const FunctionHandle& f, const ZeroLedger& ledger, int N, double delta,
                          double tol);

/// Checks the partial-sum inequality sum s(n) <= c * sum kappa'(n) with
/// c = 1 for the slit plane and c = 1/2 for line-complement and half-plane
/// images. Tolerance slack 1e-6.
bool s_bound_check(const FunctionHandle& f, const ZeroLedger& ledger, int N, const Region& region,
                   double delta, double tol);

/// Residual of the radial-derivative identity
/// I(r) - (1/2pi) int_0^pi r d/dr ln|f(r e^{i theta})| d theta,
/// with the radial derivative taken by central difference (h = 1e-6 r).
double radial_identity_check(const FunctionHandle& f, double r, double tol);

/// Log-averaged index J(r) = (1/ln(1/r)) int_r^1 I(t)/t dt by trapezoid in
/// ln t over the profile grid, which must cover [r, 1]. The error estimate
/// (optional out) comes from a grid-halving comparison.
double J_profile(const IndexProfile& prof, double r, double* error_estimate = nullptr);

}  // namespace argus
