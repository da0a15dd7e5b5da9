#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace argus {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Base class for all numerical-engine failures.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct origin_too_close : error { using error::error; };
struct refinement_exhausted : error { using error::error; };
struct zero_on_path : error { using error::error; };
struct quadrature_mismatch : error { using error::error; };
struct non_integer_result : error { using error::error; };
struct unsupported_region : error { using error::error; };
struct zero_off_radius : error { using error::error; };
struct extrapolation_diverged : error { using error::error; };
struct zero_near_radius : error { using error::error; };
struct grid_too_coarse : error { using error::error; };
struct pole_input : error { using error::error; };
struct pole_at_z : error { using error::error; };
struct tail_not_certified : error { using error::error; };
struct bound_violated : error { using error::error; };
struct underflow_dominated : error { using error::error; };
struct g_vanishes : error { using error::error; };
struct alpha_nonpositive : error { using error::error; };
struct quadrature_failed : error { using error::error; };
struct leading_coefficient_zero : error { using error::error; };
struct degenerate_spec : error { using error::error; };
struct budget_exhausted : error { using error::error; };
struct invalid_argument : error { using error::error; };

}  // namespace argus
