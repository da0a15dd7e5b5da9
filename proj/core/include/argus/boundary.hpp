#pragma once

#include <optional>
#include <vector>

#include <argus/function.hpp>
#include <argus/geometry.hpp>
#include <argus/types.hpp>

namespace argus {

/// Vanishing-order classification at a boundary point from log-log secant
/// slopes along an approach path.
struct VanishingReport {
  enum class Kind { OrderK, InfiniteOrderUpTo, Nonvanishing };
  cplx point{0.0, 0.0};
  Kind kind = Kind::Nonvanishing;
  int order = 0;  // k for OrderK, N_max for InfiniteOrderUpTo
  int n_max = 0;
  std::vector<std::pair<double, double>> slope_trace;  // (scale, local order)
  double deepest_reliable_scale = 0.0;
};

/// Samples |f| at geometric scales base^{-k}, k = 4.., along the approach
/// path (which must terminate at `a`), estimates the local order as secant
/// slopes of ln|f| vs ln(scale), and classifies:
///  - OrderK when the last three slopes agree within 0.1 of an integer k;
///  - InfiniteOrderUpTo(n_max) when the slope exceeds n_max;
///  - Nonvanishing when the slopes settle near 0 and |f| does not decay.
/// Throws underflow_dominated if |f| underflows before stabilizing.
VanishingReport vanishing_order(const FunctionHandle& f, cplx a, const PathSpec& approach,
                                int n_max, double base = 2.0);

struct InfinitesimalTraceRow {
  double scale;
  double log_ratio;  // ln|f| - N ln|g| at the scale, for the failing/last N
};

struct InfinitesimalResult {
  bool ok = false;
  int first_failing_n = 0;  // 0 when ok
  std::vector<InfinitesimalTraceRow> trace;
};

/// Checks, for each N <= n_max, that |f|/|g|^N decreases monotonically
/// toward 0 over the last three usable dyadic scales along the approach.
/// Works in logs; throws g_vanishes if |g| underflows at a sample.
InfinitesimalResult infinitesimal_wrt(const FunctionHandle& f, const FunctionHandle& g, cplx a,
                                      const PathSpec& approach, int n_max);

struct ConeCertificate {
  bool ok = false;
  double worst_margin = 0.0;
  std::optional<cplx> witness;  // a violating sample point when !ok
};

/// Samples f on the real interval (lo, hi) and certifies that every image
/// lies in the region. Total; never throws on violation.
ConeCertificate cone_certify(const FunctionHandle& f, double lo, double hi, const Region& region,
                             int samples);

}  // namespace argus
