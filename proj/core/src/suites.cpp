#include <argus/suites.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <argus/blaschke.hpp>
#include <argus/boundary.hpp>
#include <argus/contour_index.hpp>
#include <argus/cusp.hpp>
#include <argus/index_profile.hpp>

namespace argus::suites {

namespace {

constexpr double kPi = 3.14159265358979323846;

ZeroRecord zero(cplx at, int mult, ZeroPlacement placement) {
  return ZeroRecord{at, mult, placement};
}

FactorySpec plan(std::vector<ZeroRecord> zeros) {
  FactorySpec spec;
  spec.zero_plan = std::move(zeros);
  return spec;
}

CheckRecord record(std::string name, std::string anchor, double measured, double expected,
                   double tolerance) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.paper_anchor = std::move(anchor);
  rec.measured = measured;
  rec.expected = expected;
  rec.tolerance = tolerance;
  rec.pass = std::abs(measured - expected) <= tolerance;
  return rec;
}

// Boolean checks encode pass as measured == 1.
CheckRecord flag_record(std::string name, std::string anchor, bool ok) {
  return record(std::move(name), std::move(anchor), ok ? 1.0 : 0.0, 1.0, 0.5);
}

double counterexample_I(double r) { return 1.0 / (std::sqrt(r) * std::sqrt(2.0) * kPi); }

double counterexample_J(double r) {
  return (2.0 / (std::sqrt(2.0) * kPi)) * (1.0 / std::sqrt(r) - 1.0) / std::log(1.0 / r);
}

}  // namespace

FunctionHandle builtin_counterexample() {
  FunctionHandle f;
  f.evaluator = [](cplx z) { return counterexample_envelope(z); };
  f.derivative = [](cplx z) {
    return counterexample_envelope(z) * 0.5 * std::polar(1.0, kPi / 4.0) / (z * std::sqrt(z));
  };
  f.domain = Region::upper_half_plane();
  return f;
}

FunctionHandle builtin_cusp_example_product(double eps) {
  FunctionHandle f;
  f.evaluator = [eps](cplx z) { return assembled_counterexample(z, eps); };
  f.domain = Region::upper_half_plane();
  return f;
}

FunctionHandle builtin_by_name(const std::string& name) {
  if (name == "counterexample") return builtin_counterexample();
  if (name == "cusp-example-product") return builtin_cusp_example_product();
  throw invalid_argument("unknown builtin function: " + name);
}

std::vector<NamedFixture> jump_fixtures() {
  using ZP = ZeroPlacement;
  std::vector<NamedFixture> out;

  out.push_back({"interior-simple", plan({zero(std::polar(0.5, kPi / 3.0), 1, ZP::Interior)})});
  out.push_back({"boundary-pair",
                 plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter)})});
  out.push_back({"boundary-double", plan({zero({0.5, 0.0}, 2, ZP::BoundaryDiameter)})});
  out.push_back({"boundary-single", plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter)})});
  out.push_back({"interior-double", plan({zero(std::polar(0.5, 1.0), 2, ZP::Interior)})});
  out.push_back({"mixed-same-radius",
                 plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero(std::polar(0.5, 2.0), 1, ZP::Interior)})});
  {
    FactorySpec spec = plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                             zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter)});
    spec.cofactor = CofactorKind::ExpPoly;
    spec.exp_poly = {{0.0, 0.0}, {1.0, 0.0}};  // exp(z)
    out.push_back({"boundary-pair-exp", spec});
  }
  out.push_back({"conjugate-interior-pair",
                 plan({zero(std::polar(0.5, kPi / 3.0), 1, ZP::Interior),
                       zero(std::polar(0.5, -kPi / 3.0), 1, ZP::Exterior)})});
  out.push_back({"two-radius",
                 plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero(std::polar(0.3, 0.7), 1, ZP::Interior)})});
  out.push_back({"boundary-triple-plus",
                 plan({zero({0.4, 0.0}, 3, ZP::BoundaryDiameter),
                       zero({-0.4, 0.0}, 1, ZP::BoundaryDiameter)})});
  {
    FactorySpec spec = plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                             zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter)});
    spec.cofactor = CofactorKind::ExpPoly;
    spec.exp_poly = {{0.0, 0.0}, {0.0, 0.0}, {0.3, 0.0}};  // exp(0.3 z^2)
    out.push_back({"mixed-exp-quadratic", spec});
  }
  return out;
}

std::vector<NamedFixture> conjugate_symmetric_fixtures() {
  using ZP = ZeroPlacement;
  std::vector<NamedFixture> out;
  out.push_back({"boundary-pair",
                 plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter)})});
  out.push_back({"boundary-double", plan({zero({0.5, 0.0}, 2, ZP::BoundaryDiameter)})});
  out.push_back({"two-boundary-radii",
                 plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({0.3, 0.0}, 1, ZP::BoundaryDiameter),
                       zero({-0.3, 0.0}, 1, ZP::BoundaryDiameter)})});
  out.push_back({"conjugate-interior-pair",
                 plan({zero(std::polar(0.5, kPi / 3.0), 1, ZP::Interior),
                       zero(std::polar(0.5, -kPi / 3.0), 1, ZP::Exterior)})});
  {
    FactorySpec spec = plan({zero({0.4, 0.0}, 1, ZP::BoundaryDiameter),
                             zero({-0.4, 0.0}, 1, ZP::BoundaryDiameter)});
    spec.cofactor = CofactorKind::ExpPoly;
    spec.exp_poly = {{0.0, 0.0}, {1.0, 0.0}};
    out.push_back({"boundary-pair-exp", spec});
  }
  return out;
}

FactorySpec three_radius_fixture() {
  using ZP = ZeroPlacement;
  return plan({zero({0.5, 0.0}, 1, ZP::BoundaryDiameter),
               zero({-0.5, 0.0}, 1, ZP::BoundaryDiameter),
               zero({0.0, 0.3}, 1, ZP::Interior),
               zero({0.0, -0.3}, 1, ZP::Exterior),
               zero({0.2, 0.0}, 1, ZP::BoundaryDiameter),
               zero({-0.2, 0.0}, 1, ZP::BoundaryDiameter)});
}

namespace {

double index_at(const FunctionHandle& f, double r, double tol) {
  return index_of_image(f, PathSpec::upper_semicircle({0.0, 0.0}, r), tol).value;
}

CheckRecord check_winding_exactness(double tol) {
  double worst = 0.0;
  for (int k = 1; k <= 6; ++k) {
    FunctionHandle f;
    f.evaluator = [k](cplx z) {
      cplx acc(1.0, 0.0);
      for (int i = 0; i < k; ++i) acc *= z;
      return acc;
    };
    f.derivative = [k](cplx z) {
      cplx acc(static_cast<double>(k), 0.0);
      for (int i = 0; i < k - 1; ++i) acc *= z;
      return acc;
    };
    const double got = index_at(f, 1.0, tol);
    worst = std::max(worst, std::abs(got - 0.5 * k));
  }
  return record("winding-exactness", "index-definition", worst, 0.0, std::max(tol, 1e-10));
}

CheckRecord check_argument_principle(double tol) {
  FactorySpec spec = plan({zero({0.3, 0.0}, 1, ZeroPlacement::BoundaryDiameter),
                           zero({0.0, 0.4}, 2, ZeroPlacement::Interior)});
  const FunctionHandle f = build(spec);
  const PathSpec circle = PathSpec::full_circle({0.0, 0.0}, 0.8).mark_closed();
  const double count = closed_path_zero_count(f, circle, std::max(tol, 1e-9));
  return record("argument-principle-count", "index-definition", count, 3.0, 1e-6);
}

CheckRecord check_counterexample_profile(double tol) {
  const FunctionHandle f = builtin_counterexample();
  double worst = 0.0;
  for (double r : {0.25, 0.04, 0.01}) {
    const double got = index_at(f, r, std::max(tol, 1e-9));
    worst = std::max(worst, std::abs(got / counterexample_I(r) - 1.0));
  }
  return record("counterexample-index-closed-form", "counterexample", worst, 0.0, 1e-6);
}

CheckRecord check_jump_law(double tol) {
  const double delta0 = 1e-4;
  double worst = 0.0;
  for (const auto& fixture : jump_fixtures()) {
    const FunctionHandle f = build(fixture.spec);
    const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
    for (const auto& entry : ledger)
      worst = std::max(worst, std::abs(jump_at(f, entry, delta0, tol).residual));
  }
  return record("jump-law", "jump-law", worst, 0.0, 1e-3);
}

CheckRecord check_oscillation_bound(double tol) {
  double worst = 0.0;
  for (const auto& fixture : conjugate_symmetric_fixtures()) {
    const FunctionHandle f = build(fixture.spec);
    const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
    // Gap intervals between consecutive zero radii, plus the punctured core.
    std::vector<std::pair<double, double>> gaps;
    for (std::size_t n = 0; n + 1 < ledger.size(); ++n)
      gaps.emplace_back(ledger[n + 1].radius, ledger[n].radius);
    gaps.emplace_back(0.0, ledger.back().radius);
    for (auto [lo, hi] : gaps) {
      const double a = std::max(lo * 1.01 + 1e-3, hi / 16.0);
      const double b = hi * 0.99 - 1e-3;
      double vmin = std::numeric_limits<double>::infinity();
      double vmax = -vmin;
      for (int i = 0; i <= 8; ++i) {
        const double r = a * std::pow(b / a, i / 8.0);
        const double v = index_at(f, r, tol);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
      worst = std::max(worst, vmax - vmin);
    }
  }
  CheckRecord rec = record("oscillation-bound", "oscillation-bound", worst, 0.0, 2.0);
  rec.pass = worst < 2.0;
  return rec;
}

CheckRecord check_telescoping(double tol) {
  const FunctionHandle f = build(three_radius_fixture());
  const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
  const double residual = summation_relation(f, ledger, 2, 1e-4, tol);
  return record("telescoping-identity", "telescoping-identity", residual, 0.0, 1e-3);
}

CheckRecord check_segment_bound(double tol) {
  const FunctionHandle f = build(three_radius_fixture());
  const ZeroLedger ledger = ledger_from_zeros(f.declared_zeros);
  const bool ok = s_bound_check(f, ledger, 2, Region::slit_plane(), 1e-4, tol);
  return flag_record("segment-sum-bound", "segment-sum-bound", ok);
}

CheckRecord check_radial_identity(double tol) {
  std::vector<FunctionHandle> fs;
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return z; };
    f.derivative = [](cplx) { return cplx(1.0, 0.0); };
    fs.push_back(f);
  }
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return std::exp(z); };
    f.derivative = [](cplx z) { return std::exp(z); };
    fs.push_back(f);
  }
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return std::exp(0.3 * z * z + z); };
    f.derivative = [](cplx z) { return (0.6 * z + 1.0) * std::exp(0.3 * z * z + z); };
    fs.push_back(f);
  }
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return z - 2.0; };
    f.derivative = [](cplx) { return cplx(1.0, 0.0); };
    fs.push_back(f);
  }
  fs.push_back(builtin_counterexample());
  double worst = 0.0;
  for (const auto& f : fs)
    for (double r : {0.3, 0.7})
      worst = std::max(worst, std::abs(radial_identity_check(f, r, std::max(tol, 1e-10))));
  return record("radial-derivative-identity", "radial-identity", worst, 0.0, 1e-5);
}

CheckRecord check_log_averaged_divergence(double tol) {
  const FunctionHandle f = builtin_counterexample();
  const int steps = 256;  // grid hits r = 4^{-k} exactly at i = 64 k
  std::vector<double> radii(steps + 1);
  for (int i = 0; i <= steps; ++i) radii[i] = std::pow(4.0, -4.0 * i / steps);
  const IndexProfile prof = profile(f, radii, std::max(tol, 1e-9));
  double worst = 0.0;
  double prev = -std::numeric_limits<double>::infinity();
  bool increasing = true;
  for (int k = 1; k <= 4; ++k) {
    const double r = prof.radii[64 * k];
    const double got = J_profile(prof, r);
    increasing = increasing && got > prev;
    prev = got;
    worst = std::max(worst, std::abs(got / counterexample_J(r) - 1.0));
  }
  CheckRecord rec = record("log-averaged-divergence", "counterexample", worst, 0.0, 1e-3);
  rec.pass = rec.pass && increasing;
  return rec;
}

CheckRecord check_blaschke_certificate() {
  const ConvergenceCertificate c20 = convergence_certificate(20, 20);
  const ConvergenceCertificate c30 = convergence_certificate(30, 30);
  // The larger window's partial sum must stay within the smaller window's
  // certified envelope.
  const bool consistent = c20.pointwise_bound_checked && c30.pointwise_bound_checked &&
                          c30.partial_sum >= c20.partial_sum - 1e-12 &&
                          c30.partial_sum <= c20.partial_sum + c20.tail_bound;
  return flag_record("blaschke-convergence-certificate", "cusp-sequence", consistent);
}

CheckRecord check_cusp_envelope() {
  const CuspProfile prof = CuspProfile::monomial(2, 1.0, 0.5);
  const double got = warschawski_envelope(prof, 0.1);
  const double want = std::exp(-48.0 * kPi);
  return record("cusp-envelope-closed-form", "cusp-asymptotics", got / want - 1.0, 0.0, 1e-8);
}

CheckRecord check_kaiser_lehner() {
  double worst = 0.0;
  for (int N : {2, 3, 5}) {
    const double aN = 0.5 * N;
    const auto c = kaiser_lehner_coeffs(CuspProfile::monomial(N, aN, 0.5));
    worst = std::max(worst, std::abs(c[0] - kPi / (N * aN)));
    for (std::size_t k = 1; k < c.size(); ++k) worst = std::max(worst, std::abs(c[k]));
  }
  return record("cusp-exponent-coefficients", "cusp-asymptotics", worst, 0.0, 1e-12);
}

CheckRecord check_vanishing_order() {
  bool ok = true;
  {
    const FunctionHandle f = build(plan({zero({0.5, 0.0}, 2, ZeroPlacement::BoundaryDiameter)}));
    const PathSpec approach = PathSpec::segment({0.5, 0.3}, {0.5, 0.0});
    const VanishingReport rep = vanishing_order(f, {0.5, 0.0}, approach, 8);
    ok = ok && rep.kind == VanishingReport::Kind::OrderK && rep.order == 2;
  }
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return z * z * z; };
    f.derivative = [](cplx z) { return 3.0 * z * z; };
    const PathSpec approach = PathSpec::segment({0.0, 0.5}, {0.0, 0.0});
    const VanishingReport rep = vanishing_order(f, {0.0, 0.0}, approach, 8);
    ok = ok && rep.kind == VanishingReport::Kind::OrderK && rep.order == 3;
  }
  {
    FunctionHandle f;
    f.evaluator = [](cplx z) { return z + 2.0; };
    f.derivative = [](cplx) { return cplx(1.0, 0.0); };
    const PathSpec approach = PathSpec::segment({0.5, 0.3}, {0.5, 0.0});
    const VanishingReport rep = vanishing_order(f, {0.5, 0.0}, approach, 8);
    ok = ok && rep.kind == VanishingReport::Kind::Nonvanishing;
  }
  {
    const FunctionHandle f = builtin_counterexample();
    const PathSpec approach = PathSpec::segment({0.0, 0.5}, {0.0, 0.0});
    const VanishingReport rep = vanishing_order(f, {0.0, 0.0}, approach, 8);
    ok = ok && rep.kind == VanishingReport::Kind::InfiniteOrderUpTo;
  }
  return flag_record("vanishing-order-classification", "boundary-zeros", ok);
}

CheckRecord check_infinitesimal() {
  const FunctionHandle f = builtin_counterexample();
  FunctionHandle g;
  g.evaluator = [](cplx z) { return z; };
  g.derivative = [](cplx) { return cplx(1.0, 0.0); };
  const PathSpec approach = PathSpec::segment({0.0, 0.75}, {0.0, 0.0});
  const InfinitesimalResult res = infinitesimal_wrt(f, g, {0.0, 0.0}, approach, 8);
  // Reversing the roles must fail at N = 1 already.
  const InfinitesimalResult rev = infinitesimal_wrt(g, f, {0.0, 0.0}, approach, 1);
  return flag_record("infinitesimal-comparison", "boundary-zeros", res.ok && !rev.ok);
}

CheckRecord check_cone_certification() {
  FunctionHandle pos;
  pos.evaluator = [](cplx z) { return z * z + 2.0; };
  pos.derivative = [](cplx z) { return 2.0 * z; };
  FunctionHandle neg;
  neg.evaluator = [](cplx z) { return cplx(0.0, 1.0) * z; };
  neg.derivative = [](cplx) { return cplx(0.0, 1.0); };
  const ConeCertificate good = cone_certify(pos, -1.0, 1.0, Region::cone(1.0), 400);
  const ConeCertificate bad = cone_certify(neg, -1.0, 1.0, Region::cone_infinity(), 400);
  return flag_record("cone-certification", "image-geometry", good.ok && !bad.ok);
}

CheckRecord check_injected_jump_failure(double tol) {
  // Negative control: score the interior-simple fixture against a ledger
  // whose interior multiplicity is deliberately off by one.
  const FunctionHandle f =
      build(plan({zero(std::polar(0.5, kPi / 3.0), 1, ZeroPlacement::Interior)}));
  ZeroLedgerEntry corrupted{0.5, 2, 0, 0};
  const double residual = jump_at(f, corrupted, 1e-4, tol).residual;
  return record("jump-law-injected", "jump-law", residual, 0.0, 1e-3);
}

}  // namespace

std::vector<CheckRecord> run_all(double tolerance, const std::string& inject_failure) {
  if (!(tolerance >= 1e-12 && tolerance <= 1e-2))
    throw invalid_argument("tolerance must lie in [1e-12, 1e-2]");
  std::vector<CheckRecord> checks;
  checks.push_back(check_winding_exactness(tolerance));
  checks.push_back(check_argument_principle(tolerance));
  checks.push_back(check_counterexample_profile(tolerance));
  checks.push_back(check_jump_law(tolerance));
  checks.push_back(check_oscillation_bound(tolerance));
  checks.push_back(check_telescoping(tolerance));
  checks.push_back(check_segment_bound(tolerance));
  checks.push_back(check_radial_identity(tolerance));
  checks.push_back(check_log_averaged_divergence(tolerance));
  checks.push_back(check_blaschke_certificate());
  checks.push_back(check_cusp_envelope());
  checks.push_back(check_kaiser_lehner());
  checks.push_back(check_vanishing_order());
  checks.push_back(check_infinitesimal());
  checks.push_back(check_cone_certification());
  if (inject_failure == "jump-law") {
    checks.push_back(check_injected_jump_failure(tolerance));
  } else if (!inject_failure.empty()) {
    throw invalid_argument("unknown failure injection: " + inject_failure);
  }
  return checks;
}

}  // namespace argus::suites
