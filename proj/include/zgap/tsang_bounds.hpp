#pragma once

#include <cstdint>
#include <vector>

#include "zgap/bounds.hpp"

namespace zgap {

struct TsangRow {
  std::int64_t r = 0;
  double theta_sup = 0.0;
  double theta_inf = 0.0;
  double margin_sup = 0.0;
  double margin_inf = 0.0;
};

/// Upper limit X = (4 pi r / (2r + 1)) (1 +- theta / sqrt r) of the sine-squared integral.
double tsang_upper_limit(std::int64_t r, double theta, Direction direction);

/// r^{-1/2} 2^{-1/(2r+1)} pi^{-1} ((2r)!/r!)^{1/(2r)} (\int_0^X sin^2(u/2) du/u)^{1/2},
/// the moment bound with k = r in the T -> infinity limit.
/// Inf with theta >= sqrt(r) throws DomainError.
double tsang_rhs(std::int64_t r, double theta, Direction direction);

/// Largest theta < tsang_rhs(r, theta), bisected to 1e-7.
BoundResult solve_theta_tsang(std::int64_t r, Direction direction);

struct TsangUniformCheck {
  bool sup_ok = false;
  bool inf_ok = false;
  double sup_worst_margin = 0.0;
  double inf_worst_margin = 0.0;
  /// Smallest r whose rhs evaluated at X = 2 pi already exceeds the Sup
  /// constant; 0 if none up to r_max.
  std::int64_t sup_threshold_r = 0;
};

inline constexpr double kTsangUniformSup = 0.414269;
inline constexpr double kTsangUniformInf = 0.403816;

/// Checks the fixed constants for 5 <= r <= r_max:
///   inf: rhs at theta_inf is nondecreasing in r and exceeds theta_inf,
///   sup: X >= 2 pi and rhs at theta_sup exceeds theta_sup for every r.
TsangUniformCheck uniform_tsang_check(std::int64_t r_max, double theta_sup = kTsangUniformSup,
                                      double theta_inf = kTsangUniformInf);

/// solve_theta_tsang in both directions for r = 1..r_max, ordered by r.
std::vector<TsangRow> table2(std::int64_t r_max = 20);

}  // namespace zgap
