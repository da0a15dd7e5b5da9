#pragma once

#include <vector>

#include <argus/types.hpp>

namespace argus {

/// B_a(z) = (z - a)/(1 - conj(a) z); |B_a| <= 1 on the closed disc and = 1
/// on the circle.
cplx blaschke_factor(cplx a, cplx z);

enum class CayleyDirection { ToDisc, ToHalfPlane };

/// psi(z) = (z - i)/(z + i) and its inverse. Throws pole_input at the pole.
cplx cayley(cplx z, CayleyDirection direction);

/// The doubly-indexed zero sequence a_{m,n} = 1/(m^3 - i n^3) in the upper
/// half-plane, together with its Cayley images and the per-row bound
/// 1 - |alpha_{m,n}|^2 < 4/(n^3 + 1).
struct CuspExampleSequence {
  static cplx a(long long m, long long n);
  /// Closed form (1 - m^6 - n^6 - 2 i m^3) / ((1 + n^3)^2 + m^6).
  static cplx alpha(long long m, long long n);
  static double row_bound(long long n) {
    return 4.0 / (static_cast<double>(n) * n * n + 1.0);
  }
};

struct Window {
  int M = 1;  // |m| <= M
  int N = 1;  // 1 <= n <= N
};

struct ConvergenceCertificate {
  Window window;
  double partial_sum = 0.0;  // sum over window of (1 - |alpha|)
  double tail_bound = 0.0;   // analytic bound on the complement sum
  bool pointwise_bound_checked = false;
  double worst_pointwise_margin = 0.0;  // min over window of bound - (1-|alpha|^2)
};

/// Verifies the pointwise bound at every window element (bound_violated on
/// failure) and assembles a certified upper bound for the tail of
/// sum (1 - |alpha_{m,n}|) outside the window.
ConvergenceCertificate convergence_certificate(int M, int N);

/// Window zeros in the fixed deterministic enumeration order: increasing n,
/// then |m|, then positive m before negative.
std::vector<cplx> cusp_window_zeros(int M, int N);

/// A truncated zero sequence together with a certified bound on the omitted
/// tail of sum (1 - |a_j|).
struct BlaschkeSpec {
  std::vector<cplx> zeros;
  double tail_sum_bound = 0.0;

  static BlaschkeSpec finite(std::vector<cplx> zeros);
  static BlaschkeSpec cusp_example(int M, int N);
};

struct ProductResult {
  cplx value{0.0, 0.0};
  double truncation_error_bound = 0.0;
};

/// Finite Blaschke product with prefactors -a_j/|a_j| over the spec window,
/// for |z| <= rho < 1. The truncation bound scales the certified tail by
/// 2/(1 - rho); if it cannot be brought below eps, tail_not_certified.
ProductResult blaschke_product(const BlaschkeSpec& spec, cplx z, double eps, double rho = 0.95);

/// Raw window product without compactness checks; used for boundary-adjacent
/// evaluation where each factor is still bounded by 1 in modulus.
cplx window_product(const std::vector<cplx>& zeros, cplx z);

/// exp(-e^{i pi/4}/sqrt(z)) with the principal branch, continuous on the
/// closed upper half-plane minus the origin.
cplx counterexample_envelope(cplx z);

/// The assembled boundary-uniqueness counterexample
/// f(z) = exp(-e^{i pi/4}/sqrt(z)) * G(psi(z)) on Im(z) >= 0, z != 0, where
/// G is the cusp-example Blaschke product truncated so the certified tail is
/// below eps.
cplx assembled_counterexample(cplx z, double eps);

}  // namespace argus
