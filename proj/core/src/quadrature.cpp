#include <argus/quadrature.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace argus {

namespace {

// Kronrod-15 abscissae on [-1,1] (nonnegative half) and weights; the
// embedded Gauss-7 rule uses the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct IntervalEstimate {
  double kronrod;
  double error;
};

IntervalEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resg = 0.0;
  double resk = 0.0;
  for (std::size_t j = 0; j < 8; ++j) {
    const double x = h * kXgk[j];
    double fsum;
    if (j == 7) {
      fsum = f(c);
    } else {
      fsum = f(c - x) + f(c + x);
    }
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  resg *= h;
  resk *= h;
  const double err = std::abs(resk - resg);
  // Standard QUADPACK-style sharpening of the raw discrepancy.
  const double scaled = err > 0.0 ? std::min(err, std::pow(200.0 * err, 1.5)) : 0.0;
  return {resk, std::max(scaled, std::abs(resk) * 5e-16)};
}

struct Interval {
  double a, b;
  double value, error;
  int depth;
};

}  // namespace

QuadResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0, 0};
  auto first = gk15(f, a, b);
  std::vector<Interval> heap{{a, b, first.kronrod, first.error, 0}};
  double total = first.kronrod;
  double total_err = first.error;
  int depth_used = 0;

  auto tolerance = [&](double current_total) {
    return std::max(abs_tol, rel_tol * std::abs(current_total));
  };

  for (int iter = 0; iter < 20000 && total_err > tolerance(total); ++iter) {
    // Split the interval with the largest error contribution.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < heap.size(); ++i)
      if (heap[i].error > heap[worst].error) worst = i;
    Interval cur = heap[worst];
    if (cur.depth >= max_depth)
      throw quadrature_failed("adaptive quadrature exhausted max refinement depth");
    const double mid = 0.5 * (cur.a + cur.b);
    auto left = gk15(f, cur.a, mid);
    auto right = gk15(f, mid, cur.b);
    total += left.kronrod + right.kronrod - cur.value;
    total_err += left.error + right.error - cur.error;
    depth_used = std::max(depth_used, cur.depth + 1);
    heap[worst] = {cur.a, mid, left.kronrod, left.error, cur.depth + 1};
    heap.push_back({mid, cur.b, right.kronrod, right.error, cur.depth + 1});
  }
  if (total_err > tolerance(total))
    throw quadrature_failed("adaptive quadrature did not converge to tolerance");
  return {total, total_err, depth_used};
}

}  // namespace argus
