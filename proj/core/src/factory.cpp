#include <argus/factory.hpp>

#include <cmath>

#include <argus/blaschke.hpp>
#include <argus/boundary.hpp>

namespace argus {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx int_pow(cplx z, int k) {
  cplx acc(1.0, 0.0);
  for (int i = 0; i < k; ++i) acc *= z;
  return acc;
}

cplx poly_eval(const std::vector<cplx>& c, cplx z) {
  cplx acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx poly_deriv_eval(const std::vector<cplx>& c, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t j = c.size(); j-- > 1;)
    acc = acc * z + static_cast<double>(j) * c[j];
  return acc;
}

}  // namespace

FunctionHandle build(const FactorySpec& spec) {
  for (std::size_t i = 0; i < spec.zero_plan.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.zero_plan.size(); ++j) {
      if (std::abs(spec.zero_plan[i].location - spec.zero_plan[j].location) < 1e-12)
        throw degenerate_spec("duplicate zero locations across records");
    }
    if (spec.zero_plan[i].multiplicity < 1)
      throw invalid_argument("zero multiplicities must be >= 1");
  }

  std::vector<cplx> alphas;
  std::vector<int> mults;
  for (const auto& rec : spec.zero_plan) {
    alphas.push_back(rec.location);
    mults.push_back(rec.multiplicity);
  }

  const CofactorKind kind = spec.cofactor;
  const cplx constant = spec.constant;
  const std::vector<cplx> g = spec.exp_poly;

  auto cofactor = [kind, constant, g](cplx z) -> cplx {
    switch (kind) {
      case CofactorKind::Constant:
        return constant;
      case CofactorKind::ExpPoly:
        return constant * std::exp(poly_eval(g, z));
      case CofactorKind::CounterexampleEnvelope:
        return constant * counterexample_envelope(z);
    }
    return constant;
  };
  // Logarithmic derivative of the cofactor (zero-free by construction).
  auto cofactor_logd = [kind, g](cplx z) -> cplx {
    switch (kind) {
      case CofactorKind::Constant:
        return {0.0, 0.0};
      case CofactorKind::ExpPoly:
        return poly_deriv_eval(g, z);
      case CofactorKind::CounterexampleEnvelope:
        return 0.5 * std::polar(1.0, kPi / 4.0) / (z * std::sqrt(z));
    }
    return {0.0, 0.0};
  };

  auto product = [alphas, mults](cplx z) {
    cplx acc(1.0, 0.0);
    for (std::size_t j = 0; j < alphas.size(); ++j) acc *= int_pow(z - alphas[j], mults[j]);
    return acc;
  };
  // Product rule keeps the derivative exact at the zeros themselves, where
  // the l_j/(z - alpha_j) form is singular.
  auto product_deriv = [alphas, mults](cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      cplx term = static_cast<double>(mults[j]) * int_pow(z - alphas[j], mults[j] - 1);
      for (std::size_t k = 0; k < alphas.size(); ++k)
        if (k != j) term *= int_pow(z - alphas[k], mults[k]);
      acc += term;
    }
    return acc;
  };

  FunctionHandle f;
  f.evaluator = [product, cofactor](cplx z) { return product(z) * cofactor(z); };
  f.derivative = [product, product_deriv, cofactor, cofactor_logd](cplx z) {
    const cplx phi = cofactor(z);
    return product_deriv(z) * phi + product(z) * phi * cofactor_logd(z);
  };
  f.declared_zeros = spec.zero_plan;
  validate_declared_zeros(f);
  return f;
}

FactorySpec perturb_to_cone(const FactorySpec& spec, double lo, double hi, const Region& region,
                            int budget) {
  switch (region.kind()) {
    case RegionKind::ConeC:
    case RegionKind::ConeInfinity:
    case RegionKind::SlitPlane:
    case RegionKind::HalfPlane:
      break;
    default:
      throw unsupported_region("perturb_to_cone targets cones, slit planes, and half-planes");
  }
  int tried = 0;
  // Phase rotations of the cofactor constant, coarse-to-fine.
  for (int k = 0; k < budget; ++k, ++tried) {
    const double theta = 2.0 * kPi * k / budget;
    FactorySpec candidate = spec;
    candidate.constant = spec.constant * std::polar(1.0, theta);
    candidate.target_region = region;
    const FunctionHandle f = build(candidate);
    if (cone_certify(f, lo, hi, region, 400).ok) return candidate;
  }
  throw budget_exhausted("no cofactor perturbation satisfied the cone certificate");
}

namespace {

nlohmann::json cplx_to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::json region_to_json(const Region& r) {
  nlohmann::json j;
  switch (r.kind()) {
    case RegionKind::ConeC:
      j["kind"] = "cone";
      j["C"] = r.cone_slope();
      break;
    case RegionKind::ConeInfinity:
      j["kind"] = "cone-infinity";
      break;
    case RegionKind::HalfPlane:
      j["kind"] = "half-plane";
      j["a"] = cplx_to_json(r.half_plane_coefficient());
      break;
    case RegionKind::UpperHalfDisc:
      j["kind"] = "upper-half-disc";
      break;
    case RegionKind::UpperHalfPlane:
      j["kind"] = "upper-half-plane";
      break;
    case RegionKind::SlitPlane:
      j["kind"] = "slit-plane";
      j["include_origin"] = r.includes_origin();
      break;
  }
  return j;
}

Region region_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cone") return Region::cone(j.at("C").get<double>());
  if (kind == "cone-infinity") return Region::cone_infinity();
  if (kind == "half-plane") return Region::half_plane(cplx_from_json(j.at("a")));
  if (kind == "upper-half-disc") return Region::upper_half_disc();
  if (kind == "upper-half-plane") return Region::upper_half_plane();
  if (kind == "slit-plane") return Region::slit_plane(j.value("include_origin", true));
  throw invalid_argument("unknown region kind: " + kind);
}

}  // namespace

nlohmann::json spec_to_json(const FactorySpec& spec) {
  nlohmann::json j;
  j["zero_plan"] = nlohmann::json::array();
  for (const auto& rec : spec.zero_plan) {
    j["zero_plan"].push_back({{"location", cplx_to_json(rec.location)},
                              {"multiplicity", rec.multiplicity},
                              {"placement", rec.placement == ZeroPlacement::Interior
                                                ? "interior"
                                                : rec.placement == ZeroPlacement::BoundaryDiameter
                                                      ? "boundary-diameter"
                                                      : "exterior"}});
  }
  switch (spec.cofactor) {
    case CofactorKind::Constant:
      j["cofactor"] = "constant";
      break;
    case CofactorKind::ExpPoly:
      j["cofactor"] = "exp-poly";
      break;
    case CofactorKind::CounterexampleEnvelope:
      j["cofactor"] = "counterexample-envelope";
      break;
  }
  j["constant"] = cplx_to_json(spec.constant);
  j["exp_poly"] = nlohmann::json::array();
  for (cplx c : spec.exp_poly) j["exp_poly"].push_back(cplx_to_json(c));
  if (spec.target_region) j["target_region"] = region_to_json(*spec.target_region);
  return j;
}

FactorySpec spec_from_json(const nlohmann::json& j) {
  FactorySpec spec;
  for (const auto& rec : j.value("zero_plan", nlohmann::json::array())) {
    ZeroRecord zr;
    zr.location = cplx_from_json(rec.at("location"));
    zr.multiplicity = rec.value("multiplicity", 1);
    const std::string placement = rec.value("placement", std::string("interior"));
    if (placement == "interior")
      zr.placement = ZeroPlacement::Interior;
    else if (placement == "boundary-diameter")
      zr.placement = ZeroPlacement::BoundaryDiameter;
    else if (placement == "exterior")
      zr.placement = ZeroPlacement::Exterior;
    else
      throw invalid_argument("unknown zero placement: " + placement);
    spec.zero_plan.push_back(zr);
  }
  const std::string kind = j.value("cofactor", std::string("constant"));
  if (kind == "constant")
    spec.cofactor = CofactorKind::Constant;
  else if (kind == "exp-poly")
    spec.cofactor = CofactorKind::ExpPoly;
  else if (kind == "counterexample-envelope")
    spec.cofactor = CofactorKind::CounterexampleEnvelope;
  else
    throw invalid_argument("unknown cofactor kind: " + kind);
  if (j.contains("constant")) spec.constant = cplx_from_json(j.at("constant"));
  for (const auto& c : j.value("exp_poly", nlohmann::json::array()))
    spec.exp_poly.push_back(cplx_from_json(c));
  if (j.contains("target_region")) spec.target_region = region_from_json(j.at("target_region"));
  return spec;
}

}  // namespace argus
