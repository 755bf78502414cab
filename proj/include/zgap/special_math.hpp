#pragma once

#include <cstdint>

namespace zgap {

/// Default absolute target for the oscillatory quadrature.
inline constexpr double kDefaultQuadratureTol = 1e-9;

struct QuadratureEstimate {
  double value = 0.0;
  double abs_error = 0.0;
  std::int64_t n_evals = 0;
};

/// \int_0^1 sin(pi a v) / (pi v) * (1 - v)^s dv.
///
/// [0, 1] is cut at the sign changes v_k = k / a of the sine and every
/// half-period panel is integrated with 15-point Gauss-Legendre, bisecting a
/// panel further when the rule and its two halves disagree. Near v = 0 the
/// integrand is taken from its Taylor series. When the panel budget
/// max(1e5, 20 a) runs out the partial estimate is returned with an
/// abs_error that covers the unintegrated remainder.
///
/// Throws DomainError when a is not a finite positive number or s < 0.
QuadratureEstimate integrate_oscillatory(double a, double s,
                                         double abs_tol = kDefaultQuadratureTol);

/// \int_0^x sin^2(u/2) / u du, i.e. (gamma + ln x - Ci(x)) / 2.
double sin_half_sq_integral(double x);

/// ((2r)! / r!)^(1 / (2r)) evaluated through log-gamma.
double factorial_ratio_root(std::int64_t r);

}  // namespace zgap
