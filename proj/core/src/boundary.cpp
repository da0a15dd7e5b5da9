#include <argus/boundary.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace argus {

namespace {

constexpr double kLogFloor = -690.0;  // ln of the smallest comfortably-normal double

cplx path_point(const PathSpec& path, double u) {
  const auto& pieces = path.pieces();
  const double scaled = u * static_cast<double>(pieces.size());
  std::size_t idx = std::min(static_cast<std::size_t>(scaled), pieces.size() - 1);
  return pieces[idx].point(scaled - static_cast<double>(idx));
}

// Point on the approach path at distance `s` from the terminal point `a`.
// Assumes the distance to `a` is monotone along the tail of the path.
cplx point_at_distance(const PathSpec& path, cplx a, double s) {
  if (std::abs(path.end() - a) > 1e-9 * std::max(1.0, std::abs(a)))
    throw invalid_argument("approach path does not terminate at the target point");
  double lo = 0.0, hi = 1.0;
  if (std::abs(path_point(path, 0.0) - a) < s)
    throw invalid_argument("approach path starts closer than the requested scale");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(path_point(path, mid) - a) > s)
      lo = mid;
    else
      hi = mid;
  }
  return path_point(path, 0.5 * (lo + hi));
}

double log_mod(const FunctionHandle& f, cplx z) { return std::log(std::abs(f(z))); }

}  // namespace

VanishingReport vanishing_order(const FunctionHandle& f, cplx a, const PathSpec& approach,
                                int n_max, double base) {
  if (n_max < 1) throw invalid_argument("n_max must be positive");
  if (!(base > 1.0)) throw invalid_argument("geometric base must exceed 1");

  VanishingReport report;
  report.point = a;
  report.n_max = n_max;

  std::vector<double> log_scales;
  std::vector<double> log_mods;
  double deepest = 0.0;

  const double log_base = std::log(base);
  const int k_start = 4;
  const int k_end = static_cast<int>(std::floor(30.0 / (log_base / std::log(2.0))));

  for (int k = k_start; k <= k_end; ++k) {
    const double s = std::exp(-k * log_base);
    const cplx z = point_at_distance(approach, a, s);
    const double mod = std::abs(f(z));
    if (!(mod > 0.0) || std::log(mod) < kLogFloor) break;  // underflow floor
    log_scales.push_back(-k * log_base);
    log_mods.push_back(std::log(mod));
    deepest = s;

    const std::size_t n = log_scales.size();
    if (n >= 2) {
      const double slope = (log_mods[n - 1] - log_mods[n - 2]) /
                           (log_scales[n - 1] - log_scales[n - 2]);
      report.slope_trace.emplace_back(s, slope);
      if (slope > static_cast<double>(n_max)) {
        report.kind = VanishingReport::Kind::InfiniteOrderUpTo;
        report.order = n_max;
        report.deepest_reliable_scale = deepest;
        return report;
      }
    }
    if (report.slope_trace.size() >= 3) {
      const std::size_t t = report.slope_trace.size();
      const double s1 = report.slope_trace[t - 3].second;
      const double s2 = report.slope_trace[t - 2].second;
      const double s3 = report.slope_trace[t - 1].second;
      const double lo = std::min({s1, s2, s3});
      const double hi = std::max({s1, s2, s3});
      if (hi - lo <= 0.1) {
        const double mean = (s1 + s2 + s3) / 3.0;
        const double nearest = std::round(mean);
        if (std::abs(mean - nearest) <= 0.1) {
          report.deepest_reliable_scale = deepest;
          if (nearest < 0.5) {
            report.kind = VanishingReport::Kind::Nonvanishing;
            report.order = 0;
          } else {
            report.kind = VanishingReport::Kind::OrderK;
            report.order = static_cast<int>(nearest);
          }
          return report;
        }
      }
    }
  }
  report.deepest_reliable_scale = deepest;
  throw underflow_dominated("|f| underflowed before the order classification stabilized");
}

InfinitesimalResult infinitesimal_wrt(const FunctionHandle& f, const FunctionHandle& g, cplx a,
                                      const PathSpec& approach, int n_max) {
  if (n_max < 1) throw invalid_argument("n_max must be positive");

  std::vector<double> lf, lg, scales;
  for (int k = 1; k <= 40; ++k) {
    const double s = std::pow(2.0, -k);
    const cplx z = point_at_distance(approach, a, s);
    const double gm = std::abs(g(z));
    if (!(gm > 0.0) || std::log(gm) < kLogFloor) {
      if (scales.empty()) throw g_vanishes("|g| underflowed at the first sample");
      break;
    }
    const double fm = std::abs(f(z));
    if (!(fm > 0.0) || std::log(fm) < kLogFloor) break;
    scales.push_back(s);
    lf.push_back(std::log(fm));
    lg.push_back(std::log(gm));
  }
  if (scales.size() < 3)
    throw underflow_dominated("fewer than three usable dyadic scales before underflow");

  const std::size_t n = scales.size();
  InfinitesimalResult result;
  result.ok = true;
  for (int N = 1; N <= n_max; ++N) {
    const double q1 = lf[n - 3] - N * lg[n - 3];
    const double q2 = lf[n - 2] - N * lg[n - 2];
    const double q3 = lf[n - 1] - N * lg[n - 1];
    if (!(q1 > q2 && q2 > q3)) {
      result.ok = false;
      result.first_failing_n = N;
      result.trace = {{scales[n - 3], q1}, {scales[n - 2], q2}, {scales[n - 1], q3}};
      return result;
    }
  }
  result.trace = {{scales[n - 3], lf[n - 3] - lg[n - 3]},
                  {scales[n - 2], lf[n - 2] - lg[n - 2]},
                  {scales[n - 1], lf[n - 1] - lg[n - 1]}};
  return result;
}

ConeCertificate cone_certify(const FunctionHandle& f, double lo, double hi, const Region& region,
                             int samples) {
  if (samples < 2) throw invalid_argument("cone_certify requires at least 2 samples");
  if (!(lo < hi)) throw invalid_argument("empty interval");

  const bool has_margin = region.kind() == RegionKind::ConeC ||
                          region.kind() == RegionKind::ConeInfinity ||
                          region.kind() == RegionKind::HalfPlane;
  ConeCertificate cert;
  cert.ok = true;
  cert.worst_margin = std::numeric_limits<double>::infinity();
  // Half-step inset keeps samples in the open interval.
  const double step = (hi - lo) / samples;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (i + 0.5) * step;
    const cplx w = f(cplx(x, 0.0));
    const bool inside = region.contains(w, 1e-12);
    double margin = inside ? 0.0 : -1.0;
    if (has_margin) margin = region.margin(w);
    if (margin < cert.worst_margin) cert.worst_margin = margin;
    if (!inside && !cert.witness) {
      cert.ok = false;
      cert.witness = cplx(x, 0.0);
    }
  }
  return cert;
}

}  // namespace argus
