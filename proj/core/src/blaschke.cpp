#include <argus/blaschke.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace argus {

namespace {
constexpr double kPi = 3.14159265358979323846;

double cube(double x) { return x * x * x; }

// 1 - |alpha_{m,n}|^2 by the cancellation-free closed form
// 4 (n^3 (m^6 + n^6 + n^3) + n^6 + n^3) / (m^6 + (1 + n^3)^2)^2.
double one_minus_alpha_sq(long long m, long long n) {
  const double m3 = cube(static_cast<double>(m));
  const double n3 = cube(static_cast<double>(n));
  const double m6 = m3 * m3;
  const double n6 = n3 * n3;
  const double denom = m6 + (1.0 + n3) * (1.0 + n3);
  return 4.0 * (n3 * (m6 + n6 + n3) + n6 + n3) / (denom * denom);
}
}  // namespace

cplx blaschke_factor(cplx a, cplx z) {
  if (!(std::abs(a) < 1.0)) throw invalid_argument("Blaschke zero must lie in the open disc");
  const cplx denom = 1.0 - std::conj(a) * z;
  if (std::abs(denom) < 1e-300) throw pole_at_z("Blaschke factor pole");
  return (z - a) / denom;
}

cplx cayley(cplx z, CayleyDirection direction) {
  if (direction == CayleyDirection::ToDisc) {
    const cplx denom = z + cplx(0.0, 1.0);
    if (std::abs(denom) < 1e-300) throw pole_input("Cayley pole at z = -i");
    return (z - cplx(0.0, 1.0)) / denom;
  }
  const cplx denom = 1.0 - z;
  if (std::abs(denom) < 1e-300) throw pole_input("inverse Cayley pole at z = 1");
  return cplx(0.0, 1.0) * (1.0 + z) / denom;
}

cplx CuspExampleSequence::a(long long m, long long n) {
  const double m3 = cube(static_cast<double>(m));
  const double n3 = cube(static_cast<double>(n));
  return 1.0 / cplx(m3, -n3);
}

cplx CuspExampleSequence::alpha(long long m, long long n) {
  const double m3 = cube(static_cast<double>(m));
  const double n3 = cube(static_cast<double>(n));
  const double m6 = m3 * m3;
  const double n6 = n3 * n3;
  const double denom = (1.0 + n3) * (1.0 + n3) + m6;
  return cplx(1.0 - m6 - n6, -2.0 * m3) / denom;
}

ConvergenceCertificate convergence_certificate(int M, int N) {
  if (M < 1 || N < 1) throw invalid_argument("window requires M, N >= 1");
  ConvergenceCertificate cert;
  cert.window = {M, N};
  cert.worst_pointwise_margin = std::numeric_limits<double>::infinity();
  for (long long n = 1; n <= N; ++n) {
    const double bound = CuspExampleSequence::row_bound(n);
    for (long long m = -M; m <= M; ++m) {
      const double gap_sq = one_minus_alpha_sq(m, n);
      const double margin = bound - gap_sq;
      if (!(margin > 0.0))
        throw bound_violated("window element violates 1 - |alpha|^2 < 4/(n^3+1)");
      cert.worst_pointwise_margin = std::min(cert.worst_pointwise_margin, margin);
      const double mod = std::abs(CuspExampleSequence::alpha(m, n));
      cert.partial_sum += gap_sq / (1.0 + mod);  // 1 - |alpha|, cancellation-free
    }
  }
  cert.pointwise_bound_checked = true;

  const double Md = M;
  const double Nd = N;
  // Rows n > N, |m| <= M: per element 4/(n^3+1); sum_{n>N} 1/n^3 <= 1/(2N^2).
  const double t_rows = (2.0 * Md + 1.0) * 4.0 * 0.5 / (Nd * Nd);
  // Columns |m| > M, n <= N: per row 4(n^3+1) * sum_{|m|>M} 1/(m^6 + (1+n^3)^2)
  // with the m-tail bounded by 2/(5 M^5).
  double t_cols = 0.0;
  for (long long n = 1; n <= N; ++n)
    t_cols += 4.0 * (cube(static_cast<double>(n)) + 1.0) * 2.0 / (5.0 * std::pow(Md, 5));
  // Corner m > M and n > N: pointwise AM-GM gives
  // 1 - |alpha|^2 <= 2 sqrt(2) m^{-3/2} (n^3+1)^{-1/2}; integral comparison on
  // both index tails.
  const double t_corner = 16.0 * std::sqrt(2.0) / std::sqrt(Md * Nd);
  cert.tail_bound = t_rows + t_cols + t_corner;
  return cert;
}

std::vector<cplx> cusp_window_zeros(int M, int N) {
  if (M < 1 || N < 1) throw invalid_argument("window requires M, N >= 1");
  std::vector<cplx> zeros;
  zeros.reserve(static_cast<std::size_t>(N) * (2 * M + 1));
  for (long long n = 1; n <= N; ++n) {
    for (long long am = 0; am <= M; ++am) {
      zeros.push_back(CuspExampleSequence::alpha(am, n));
      if (am > 0) zeros.push_back(CuspExampleSequence::alpha(-am, n));
    }
  }
  return zeros;
}

BlaschkeSpec BlaschkeSpec::finite(std::vector<cplx> zeros) {
  for (cplx a : zeros) {
    const double mod = std::abs(a);
    if (!(mod > 0.0 && mod < 1.0))
      throw invalid_argument("Blaschke zeros must satisfy 0 < |a| < 1");
  }
  BlaschkeSpec spec;
  spec.zeros = std::move(zeros);
  spec.tail_sum_bound = 0.0;
  return spec;
}

BlaschkeSpec BlaschkeSpec::cusp_example(int M, int N) {
  BlaschkeSpec spec;
  spec.zeros = cusp_window_zeros(M, N);
  spec.tail_sum_bound = convergence_certificate(M, N).tail_bound;
  return spec;
}

cplx window_product(const std::vector<cplx>& zeros, cplx z) {
  cplx prod(1.0, 0.0);
  for (cplx a : zeros) {
    // A zero at the origin has no normalizing prefactor; its factor is z.
    const double mod = std::abs(a);
    if (mod == 0.0)
      prod *= z;
    else
      prod *= (-a / mod) * blaschke_factor(a, z);
  }
  return prod;
}

ProductResult blaschke_product(const BlaschkeSpec& spec, cplx z, double eps, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw invalid_argument("rho must lie in (0,1)");
  if (std::abs(z) > rho * (1.0 + 1e-12))
    throw invalid_argument("evaluation point outside the declared compact radius");
  const double bound = spec.tail_sum_bound * 2.0 / (1.0 - rho);
  if (bound > eps)
    throw tail_not_certified("certified tail exceeds the requested truncation error");
  return {window_product(spec.zeros, z), bound};
}

cplx counterexample_envelope(cplx z) {
  if (std::abs(z) < 1e-300) throw invalid_argument("envelope undefined at the origin");
  const cplx rotation = std::polar(1.0, kPi / 4.0);
  return std::exp(-rotation / std::sqrt(z));
}

cplx assembled_counterexample(cplx z, double eps) {
  if (std::abs(z) < 1e-300) throw invalid_argument("assembled counterexample undefined at 0");
  if (z.imag() < -1e-12) throw invalid_argument("point below the closed upper half-plane");

  static std::mutex cache_mutex;
  static std::map<double, BlaschkeSpec> cache;
  const BlaschkeSpec* spec = nullptr;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(eps);
    if (it == cache.end()) {
      int K = 10;
      while (K < 400 && convergence_certificate(K, K).tail_bound > eps) K *= 2;
      it = cache.emplace(eps, BlaschkeSpec::cusp_example(K, K)).first;
    }
    spec = &it->second;
  }
  const cplx w = cayley(z, CayleyDirection::ToDisc);
  return counterexample_envelope(z) * window_product(spec->zeros, w);
}

}  // namespace argus
