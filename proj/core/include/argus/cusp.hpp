#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <argus/types.hpp>

namespace argus {

/// A real-analytic cusp profile alpha(x) = sum_{j>=N} a_j x^j with a finite
/// coefficient list, validity radius, and the right endpoint of the
/// asymptotic integral. Leading exponent N >= 2 (cusp, not corner).
class CuspProfile {
 public:
  /// coeffs[0] is a_N, coeffs[1] is a_{N+1}, ...
  CuspProfile(int leading_exponent, std::vector<double> coeffs, double endpoint_a,
              double validity_radius = 1.0);

  static CuspProfile monomial(int N, double a_N, double endpoint_a,
                              double validity_radius = 1.0);

  double alpha(double x) const;
  int leading_exponent() const { return leading_exponent_; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double endpoint() const { return endpoint_a_; }
  double validity_radius() const { return validity_radius_; }

 private:
  int leading_exponent_;
  std::vector<double> coeffs_;
  double endpoint_a_;
  double validity_radius_;
};

/// F(t) = exp(-pi int_t^a dr/(r alpha(r))) with adaptive quadrature on the
/// substituted variable s = 1/r (relative error < 1e-10). Throws
/// alpha_nonpositive if alpha fails to be positive on [t, a].
double warschawski_envelope(const CuspProfile& profile, double t);

/// Exponent coefficients {c_0, ..., c_{N-1}} of the cusp asymptotic form
/// z^sigma exp(c_0/z^N + ... + c_{N-1}/z), obtained by expanding
/// -pi/(r alpha(r)) as a truncated Laurent series and integrating term by
/// term. The log-envelope near 0 is -c_0/t^N + ...; c_0 = pi/(N a_N).
/// sigma itself is not computed.
std::vector<double> kaiser_lehner_coeffs(const CuspProfile& profile);

/// An increasing modulus function F with F(t) -> +inf; drives the
/// generalized-Hoelder seminorm sup F(1/|h|) |u(z+h) - u(z)|.
struct FHolderModulus {
  std::function<double(double)> F;
  std::string tag;
};

struct FHolderCheckResult {
  double sup_estimate = 0.0;
  bool ok = false;
  double threshold = 0.0;
};

/// Falsification-style membership check over supplied sample pairs
/// (z, z+h): sup of F(1/|h|)|u(z+h) - u(z)| against a finite budget.
FHolderCheckResult fholder_check(const std::function<cplx(cplx)>& u, const FHolderModulus& modulus,
                                 const std::vector<std::pair<cplx, cplx>>& sample_pairs,
                                 double threshold);

}  // namespace argus
