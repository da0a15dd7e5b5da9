#include <argus/cusp.hpp>

#include <algorithm>
#include <cmath>

#include <argus/quadrature.hpp>

namespace argus {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

CuspProfile::CuspProfile(int leading_exponent, std::vector<double> coeffs, double endpoint_a,
                         double validity_radius)
    : leading_exponent_(leading_exponent),
      coeffs_(std::move(coeffs)),
      endpoint_a_(endpoint_a),
      validity_radius_(validity_radius) {
  if (leading_exponent_ < 2)
    throw invalid_argument("cusp requires leading exponent N >= 2 (vanishing opening angle)");
  if (coeffs_.empty()) throw invalid_argument("profile needs at least the leading coefficient");
  if (coeffs_.front() == 0.0) throw leading_coefficient_zero("leading coefficient a_N is zero");
  if (!(endpoint_a_ > 0.0 && endpoint_a_ <= validity_radius_))
    throw invalid_argument("endpoint a must lie in (0, validity radius]");
  // Positivity of alpha on (0, a] by sampling.
  for (int i = 1; i <= 256; ++i) {
    const double x = endpoint_a_ * i / 256.0;
    if (!(alpha(x) > 0.0)) throw alpha_nonpositive("alpha(x) <= 0 inside (0, a]");
  }
}

CuspProfile CuspProfile::monomial(int N, double a_N, double endpoint_a, double validity_radius) {
  return CuspProfile(N, {a_N}, endpoint_a, validity_radius);
}

double CuspProfile::alpha(double x) const {
  // Horner over the tail, then the leading power.
  double tail = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) tail = tail * x + *it;
  return tail * std::pow(x, leading_exponent_);
}

double warschawski_envelope(const CuspProfile& profile, double t) {
  const double a = profile.endpoint();
  if (!(t > 0.0) || t > a) throw invalid_argument("t must lie in (0, a]");
  if (t == a) return 1.0;
  // Substituting s = 1/r tames the r -> 0 singularity: the integrand becomes
  // 1/(s alpha(1/s)), polynomially behaved for monomial-led alpha.
  auto integrand = [&](double s) {
    const double r = 1.0 / s;
    const double al = profile.alpha(r);
    if (!(al > 0.0)) throw alpha_nonpositive("alpha(r) <= 0 on the integration range");
    return 1.0 / (s * al);
  };
  const QuadResult q = integrate_gk15(integrand, 1.0 / a, 1.0 / t, 1e-11, 0.0, 40);
  return std::exp(-kPi * q.value);
}

std::vector<double> kaiser_lehner_coeffs(const CuspProfile& profile) {
  const int N = profile.leading_exponent();
  const auto& a = profile.coefficients();
  // alpha(r) = a_N r^N (1 + sum b_k r^k); reciprocal series e with e_0 = 1.
  std::vector<double> b(N, 0.0);
  for (int k = 1; k < N; ++k)
    b[k] = (static_cast<std::size_t>(k) < a.size()) ? a[k] / a[0] : 0.0;
  std::vector<double> e(N, 0.0);
  e[0] = 1.0;
  for (int k = 1; k < N; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += b[j] * e[k - j];
    e[k] = -acc;
  }
  // -pi/(r alpha) = -(pi/a_N) sum_k e_k r^{k-N-1}; the antiderivative's
  // r^{-(N-k)} coefficient is c_k = (pi/a_N) e_k / (N - k).
  std::vector<double> c(N, 0.0);
  for (int k = 0; k < N; ++k) c[k] = (kPi / a[0]) * e[k] / static_cast<double>(N - k);
  return c;
}

FHolderCheckResult fholder_check(const std::function<cplx(cplx)>& u, const FHolderModulus& modulus,
                                 const std::vector<std::pair<cplx, cplx>>& sample_pairs,
                                 double threshold) {
  FHolderCheckResult result;
  result.threshold = threshold;
  for (const auto& [z, zh] : sample_pairs) {
    const double h = std::abs(zh - z);
    if (!(h > 0.0)) continue;
    const double val = modulus.F(1.0 / h) * std::abs(u(zh) - u(z));
    result.sup_estimate = std::max(result.sup_estimate, val);
  }
  result.ok = result.sup_estimate < threshold;
  return result;
}

}  // namespace argus
