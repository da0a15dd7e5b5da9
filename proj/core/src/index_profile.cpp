#include <argus/index_profile.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <argus/parallel.hpp>
#include <argus/quadrature.hpp>

namespace argus {

namespace {

constexpr double kPi = 3.14159265358979323846;

PathSpec gamma_r(double r) { return PathSpec::upper_semicircle({0.0, 0.0}, r); }

double index_at(const FunctionHandle& f, double r, double tol) {
  return index_of_image(f, gamma_r(r), tol).value;
}

// Richardson extrapolation of g at 0 from g(d), g(2d), g(4d), assuming a
// smooth expansion L + a d + b d^2.
double richardson3(double g1, double g2, double g4) {
  return (8.0 * g1 - 6.0 * g2 + g4) / 3.0;
}

}  // namespace

ZeroLedger ledger_from_zeros(const std::vector<ZeroRecord>& zeros) {
  std::map<double, ZeroLedgerEntry, std::greater<double>> by_radius;
  for (const auto& rec : zeros) {
    if (rec.placement == ZeroPlacement::Exterior) continue;
    if (rec.location.imag() < -kBoundaryTol) continue;  // below the diameter
    const double r = std::abs(rec.location);
    // Merge radii that agree to within 1e-9 relative.
    auto it = by_radius.lower_bound(r * (1.0 + 1e-9));
    if (it == by_radius.end() || std::abs(it->first - r) > 1e-9 * std::max(r, 1e-30)) {
      it = by_radius.emplace(r, ZeroLedgerEntry{r, 0, 0, 0}).first;
    }
    if (rec.placement == ZeroPlacement::BoundaryDiameter) {
      it->second.boundary_mult += rec.multiplicity;
      it->second.boundary_distinct += 1;
    } else {
      it->second.interior_mult += rec.multiplicity;
    }
  }
  ZeroLedger ledger;
  ledger.reserve(by_radius.size());
  for (const auto& [r, entry] : by_radius) ledger.push_back(entry);
  return ledger;
}

IndexProfile profile(const FunctionHandle& f, std::vector<double> radii, double tol,
                     double exclusion) {
  if (radii.empty()) throw invalid_argument("profile needs a nonempty radius grid");
  std::sort(radii.begin(), radii.end(), std::greater<double>());
  for (double r : radii) {
    if (!(r > 0.0)) throw invalid_argument("profile radii must be positive");
    for (const auto& rec : f.declared_zeros) {
      if (std::abs(std::abs(rec.location) - r) < exclusion)
        throw zero_on_path("profile radius within exclusion margin of a declared zero radius");
    }
  }
  IndexProfile prof;
  prof.radii = radii;
  prof.values.resize(radii.size());
  prof.errors.resize(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) {
    try {
      const IndexResult res = index_of_image(f, gamma_r(radii[i]), tol);
      prof.values[i] = res.value;
      prof.errors[i] = res.estimated_error;
    } catch (const zero_on_path&) {
      throw zero_on_path("f vanishes on gamma_r at r = " + std::to_string(radii[i]));
    }
  });
  return prof;
}

JumpResult jump_at(const FunctionHandle& f, const ZeroLedgerEntry& entry, double delta0,
                   double tol) {
  const double r = entry.radius;
  if (!(delta0 > 0.0) || !(r > 4.0 * delta0))
    throw invalid_argument("jump_at requires 0 < 4*delta0 < r_n");
  // All declared zeros with modulus inside the probing band must sit exactly
  // on |z| = r_n, or the one-sided limits probe through another jump.
  for (const auto& rec : f.declared_zeros) {
    const double rho = std::abs(rec.location);
    if (rho > r - 4.0 * delta0 && rho < r + 4.0 * delta0 &&
        std::abs(rho - r) > 1e-9 * std::max(r, 1e-30))
      throw zero_off_radius("declared zero inside the probing band but off the jump radius");
  }
  double left_vals[3];
  double right_vals[3];
  const double deltas[3] = {delta0, 2.0 * delta0, 4.0 * delta0};
  for (int i = 0; i < 3; ++i) {
    left_vals[i] = index_at(f, r - deltas[i], tol);
    right_vals[i] = index_at(f, r + deltas[i], tol);
  }
  JumpResult res;
  res.left = richardson3(left_vals[0], left_vals[1], left_vals[2]);
  res.right = richardson3(right_vals[0], right_vals[1], right_vals[2]);
  res.jump = res.right - res.left;
  const double predicted = entry.interior_mult + 0.5 * entry.boundary_mult;
  res.residual = res.jump - predicted;
  return res;
}

double segment_limit_index(const FunctionHandle& f, double r_outer, double r_inner, double delta,
                           double tol) {
  if (!(r_inner > 0.0) || !(r_outer > r_inner))
    throw invalid_argument("segment_limit_index requires 0 < r_inner < r_outer");
  if (!(r_inner + 4.0 * delta < r_outer - 4.0 * delta))
    throw invalid_argument("delta too large for the radius gap");
  const double eps_values[3] = {delta, 2.0 * delta, 4.0 * delta};
  double s[3];
  for (int i = 0; i < 3; ++i) {
    const double eps = eps_values[i];
    const PathSpec l_plus = PathSpec::segment({r_inner + eps, 0.0}, {r_outer - eps, 0.0});
    const PathSpec l_minus = PathSpec::segment({-r_outer + eps, 0.0}, {-r_inner - eps, 0.0});
    s[i] = index_of_image(f, l_plus, tol).value + index_of_image(f, l_minus, tol).value;
  }
  const double step_fine = std::abs(s[0] - s[1]);
  const double step_coarse = std::abs(s[1] - s[2]);
  if (step_fine > step_coarse + 1e-6 && step_fine > 1e-4)
    throw extrapolation_diverged("segment-index estimates are not settling as epsilon shrinks");
  return richardson3(s[0], s[1], s[2]);
}

double summation_relation(const FunctionHandle& f, const ZeroLedger& ledger, int N, double delta,
                          double tol) {
  if (N < 1 || static_cast<std::size_t>(N + 1) > ledger.size())
    throw invalid_argument("ledger must cover radii r_1 > ... > r_{N+1}");
  auto right_limit = [&](double r) {
    return richardson3(index_at(f, r + delta, tol), index_at(f, r + 2.0 * delta, tol),
                       index_at(f, r + 4.0 * delta, tol));
  };
  const double lhs = right_limit(ledger[0].radius) - right_limit(ledger[N].radius);
  double sum_kappa = 0.0;
  double sum_kappa_tilde = 0.0;
  double sum_s = 0.0;
  for (int n = 0; n < N; ++n) {
    sum_kappa += ledger[n].interior_mult;
    sum_kappa_tilde += ledger[n].boundary_mult;
    sum_s += segment_limit_index(f, ledger[n].radius, ledger[n + 1].radius, delta, tol);
  }
  return lhs - (sum_kappa + 0.5 * sum_kappa_tilde - sum_s);
}

bool s_bound_check(const FunctionHandle& f, const ZeroLedger& ledger, int N, const Region& region,
                   double delta, double tol) {
  double factor;
  switch (region.kind()) {
    case RegionKind::SlitPlane:
      factor = 1.0;
      break;
    case RegionKind::ConeInfinity:  // complement of a line, plus the origin
    case RegionKind::HalfPlane:
      factor = 0.5;
      break;
    default:
      throw unsupported_region("no s(n) bound stated for this region");
  }
  if (N < 1 || static_cast<std::size_t>(N + 1) > ledger.size())
    throw invalid_argument("ledger must cover radii r_1 > ... > r_{N+1}");
  double sum_s = 0.0;
  double sum_distinct = 0.0;
  for (int n = 0; n < N; ++n) {
    sum_s += segment_limit_index(f, ledger[n].radius, ledger[n + 1].radius, delta, tol);
    sum_distinct += ledger[n].boundary_distinct;
  }
  return sum_s <= factor * sum_distinct + 1e-6;
}

double radial_identity_check(const FunctionHandle& f, double r, double tol) {
  const double h = 1e-6 * r;
  // Zero-free scan over the annulus [r-2h, r+2h].
  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (int i = 0; i <= 256; ++i) {
    const double theta = kPi * i / 256.0;
    for (double rho : {r - 2.0 * h, r, r + 2.0 * h}) {
      const double m = std::abs(f(rho * cplx(std::cos(theta), std::sin(theta))));
      min_mod = std::min(min_mod, m);
      max_mod = std::max(max_mod, m);
    }
  }
  if (min_mod < 1e-12 * max_mod)
    throw zero_near_radius("f vanishes in the differencing annulus");

  const double lhs = index_at(f, r, tol);
  auto integrand = [&](double theta) {
    const cplx dir(std::cos(theta), std::sin(theta));
    const double up = std::log(std::abs(f((r + h) * dir)));
    const double down = std::log(std::abs(f((r - h) * dir)));
    return (up - down) / (2.0 * h);
  };
  const QuadResult q = integrate_gk15(integrand, 0.0, kPi, tol, tol);
  const double rhs = r * q.value / (2.0 * kPi);
  return lhs - rhs;
}

double J_profile(const IndexProfile& prof, double r, double* error_estimate) {
  const auto& radii = prof.radii;
  if (radii.size() < 3) throw grid_too_coarse("profile has too few radii");
  if (radii.front() < 1.0 - 1e-9) throw grid_too_coarse("profile grid does not reach r = 1");
  std::size_t ir = radii.size();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (std::abs(radii[i] - r) <= 1e-9 * std::max(r, 1e-30)) {
      ir = i;
      break;
    }
  }
  if (ir == radii.size()) throw grid_too_coarse("profile grid does not contain the requested radius");
  if (ir < 2) throw grid_too_coarse("too few grid points between r and 1");

  auto trapezoid = [&](std::size_t stride) {
    double acc = 0.0;
    std::size_t j = 0;
    while (j < ir) {
      const std::size_t k = std::min(j + stride, ir);
      const double dx = std::log(radii[j]) - std::log(radii[k]);
      acc += dx * 0.5 * (prof.values[j] + prof.values[k]);
      j = k;
    }
    return acc;
  };
  const double log_inv_r = std::log(1.0 / r);
  const double j_full = trapezoid(1) / log_inv_r;
  const double j_half = trapezoid(2) / log_inv_r;
  if (error_estimate) *error_estimate = std::abs(j_full - j_half);
  return j_full;
}

}  // namespace argus
