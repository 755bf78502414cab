#pragma once

#include <cstdint>
#include <vector>

#include "zgap/bounds.hpp"
#include "zgap/special_math.hpp"

namespace zgap {

/// (2 ell / sqrt(r)) * \int_0^1 sin(pi (r +- theta sqrt(r)) v) / (pi v) (1 - v)^{ell^2} dv.
///
/// The sign follows the direction. A frequency of exactly zero gives 0; an
/// Inf query with theta > sqrt(r) throws DomainError.
double ctb_rhs(std::int64_t r, double theta, double ell, Direction direction,
               double tol = kDefaultQuadratureTol);

/// Upper end of the theta search for a direction: 2 for Sup, min(2, 0.999 sqrt(r)) for Inf.
double ctb_theta_cap(std::int64_t r, Direction direction);

/// Largest theta with theta < ctb_rhs(r, theta, ell), located to 1e-6.
/// Returns a zero result when no positive theta qualifies.
BoundResult solve_theta(std::int64_t r, double ell, Direction direction,
                        double tol = kDefaultQuadratureTol);

/// Maximizes solve_theta over ell in [1, 12]: 0.25 grid, then golden section
/// around the best grid node.
BoundResult optimize_ell(std::int64_t r, Direction direction,
                         double tol = kDefaultQuadratureTol);

/// Content of the braces of the closed-form bound, i.e. sqrt(r) (rhs - A0)
/// for Sup and the subtracted term for Inf:
///   Sup: theta/(sqrt(1 + theta/sqrt r) + 1) A0 - 4 (e^{-B0 q}/pi + 1/(B0^3 q))
///   Inf: (1 - sqrt(1 - theta/sqrt r)) A0 + (4/sqrt r)(e^{-B0 q}/pi + 1/(B0^3 q))
/// with q = sqrt(r +- theta sqrt r). Requires r >= 8.
double closed_form_brace(std::int64_t r, double theta, Direction direction);

/// Closed-form lower bound for ctb_rhs at ell = B0 sqrt(r +- theta sqrt r).
/// Requires r >= 8 and |theta| <= 1.
double closed_form_rhs(std::int64_t r, double theta, Direction direction);

/// The ell at which closed_form_rhs bounds ctb_rhs.
double closed_form_ell(std::int64_t r, double theta, Direction direction);

struct UniformCheck {
  bool passed = false;         // theta_const < closed_form_rhs for every r checked
  double worst_margin = 0.0;   // min over r of closed_form_rhs - theta_const
  std::int64_t worst_r = 0;
  bool brace_monotone = false; // Sup brace increasing / Inf brace decreasing in r
};

/// Sweeps 8 <= r <= r_max. Throws DomainError when r_max is outside [8, 1e6].
UniformCheck uniform_check(Direction direction, double theta_const, std::int64_t r_max);

struct Table1Row {
  std::int64_t r = 0;
  BoundResult sup;
  BoundResult inf;
};

/// optimize_ell in both directions for r = 1..r_max.
std::vector<Table1Row> table1(std::int64_t r_max = 20, double tol = kDefaultQuadratureTol);

}  // namespace zgap
