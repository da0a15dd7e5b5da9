#pragma once

#include <functional>

#include <argus/types.hpp>

namespace argus {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // error-model upper bound
  int depth = 0;           // deepest bisection level reached
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature on [a,b]. Bisects intervals
/// whose K15-G7 discrepancy exceeds the local tolerance share. Throws
/// quadrature_failed if the tolerance cannot be met within max_depth.
QuadResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_depth = 30);

}  // namespace argus
