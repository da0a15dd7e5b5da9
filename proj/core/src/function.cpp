#include <argus/function.hpp>

#include <cmath>

namespace argus {

void validate_declared_zeros(const FunctionHandle& f) {
  for (const auto& rec : f.declared_zeros) {
    if (!is_finite(rec.location)) throw invalid_argument("declared zero has non-finite location");
    if (rec.multiplicity < 1) throw invalid_argument("declared zero multiplicity must be >= 1");
    // Local scale from a probe one percent of the zero's modulus away.
    const double step = 0.01 * std::max(std::abs(rec.location), 1e-2);
    const double local_scale =
        std::max({std::abs(f(rec.location + step)), std::abs(f(rec.location + cplx(0.0, step))), 1e-30});
    if (std::abs(f(rec.location)) >= 1e-9 * local_scale)
      throw invalid_argument("declared zero does not annihilate the evaluator");
  }
}

}  // namespace argus
