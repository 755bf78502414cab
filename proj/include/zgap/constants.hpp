#pragma once

#include <utility>

namespace zgap {

struct OptimizedConstant {
  double value = 0.0;
  double argmax = 0.0;
  double objective_at_argmax = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
};

/// (2B / pi) * arctan(pi / B^2). Throws DomainError for B <= 0.
double saddle_objective(double b);

/// Maximizes saddle_objective over [0.1, 10] by golden-section search.
/// value is the maximum (A0), argmax the maximizer (B0).
OptimizedConstant compute_A0_B0();

/// Cached result of compute_A0_B0().
const OptimizedConstant& saddle_constants();

}  // namespace zgap
