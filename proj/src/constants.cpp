#include "zgap/constants.hpp"

#include <cmath>
#include <numbers>

#include "zgap/errors.hpp"
#include "zgap/optimize.hpp"

namespace zgap {

double saddle_objective(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw DomainError("saddle_objective: B must be positive and finite");
  }
  return 2.0 * b / std::numbers::pi * std::atan(std::numbers::pi / (b * b));
}

OptimizedConstant compute_A0_B0() {
  constexpr double kLo = 0.1;
  constexpr double kHi = 10.0;
  const auto best = golden_section_maximize(saddle_objective, kLo, kHi, 1e-8);
  OptimizedConstant out;
  out.argmax = best.x;
  out.objective_at_argmax = saddle_objective(best.x);
  out.value = out.objective_at_argmax;
  out.bracket = {kLo, kHi};
  return out;
}

const OptimizedConstant& saddle_constants() {
  static const OptimizedConstant constants = compute_A0_B0();
  return constants;
}

}  // namespace zgap
