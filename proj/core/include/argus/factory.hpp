#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include <argus/function.hpp>
#include <argus/geometry.hpp>
#include <argus/types.hpp>

namespace argus {

enum class CofactorKind { Constant, ExpPoly, CounterexampleEnvelope };

/// Generator recipe for a test function with an exactly known zero ledger:
/// f(z) = prod (z - alpha_j)^{l_j} * phi(z) with a zero-free cofactor phi.
struct FactorySpec {
  std::vector<ZeroRecord> zero_plan;
  CofactorKind cofactor = CofactorKind::Constant;
  cplx constant{1.0, 0.0};
  std::vector<cplx> exp_poly;  // phi = exp(sum_j exp_poly[j] z^j)
  std::optional<Region> target_region;
};

/// Builds the function handle with the exact analytic derivative (product
/// rule over the zero factors plus the cofactor's log-derivative) and the
/// declared-zeros ledger equal to the plan. Throws degenerate_spec on
/// duplicate zero locations.
FunctionHandle build(const FactorySpec& spec);

/// Grid search over exp-poly cofactor perturbations until cone_certify
/// passes on the interval. Throws budget_exhausted when the search budget
/// runs out; throws unsupported_region unless the region is a cone, a slit
/// plane, or a half-plane.
FactorySpec perturb_to_cone(const FactorySpec& spec, double lo, double hi, const Region& region,
                            int budget = 200);

nlohmann::json spec_to_json(const FactorySpec& spec);
FactorySpec spec_from_json(const nlohmann::json& j);

}  // namespace argus
