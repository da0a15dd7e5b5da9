#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <argus/geometry.hpp>
#include <argus/types.hpp>

namespace argus {

/// An evaluatable holomorphic function with an optional analytic derivative
/// and an optional ledger of declared zeros. Immutable after construction;
/// all evaluation is pure.
struct FunctionHandle {
  std::function<cplx(cplx)> evaluator;
  std::function<cplx(cplx)> derivative;  // empty => central-difference fallback
  std::vector<ZeroRecord> declared_zeros;
  Region domain = Region::upper_half_disc();

  cplx operator()(cplx z) const { return evaluator(z); }

  bool has_analytic_derivative() const { return static_cast<bool>(derivative); }

  /// Analytic derivative when present, otherwise a central difference with
  /// step h = max(1e-7, 1e-7|z|). Callers sensitive to differencing noise
  /// (f'/f near zeros) must check has_analytic_derivative() first.
  cplx deriv(cplx z) const {
    if (derivative) return derivative(z);
    const double h = std::max(1e-7, 1e-7 * std::abs(z));
    return (evaluator(z + h) - evaluator(z - h)) / (2.0 * h);
  }
};

/// Asserts that every declared zero actually annihilates the evaluator to
/// within 1e-9 of the local scale. Throws invalid_argument on violation.
void validate_declared_zeros(const FunctionHandle& f);

}  // namespace argus
