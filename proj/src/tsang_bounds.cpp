#include "zgap/tsang_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zgap/errors.hpp"
#include "zgap/optimize.hpp"
#include "zgap/special_math.hpp"

namespace zgap {
namespace {

constexpr double kThetaTol = 1e-7;
constexpr double kThetaScanStep = 0.05;
constexpr std::int64_t kUniformMinR = 5;

// r^{-1/2} 2^{-1/(2r+1)} pi^{-1} ((2r)!/r!)^{1/(2r)}
double moment_prefactor(std::int64_t r) {
  const double rd = static_cast<double>(r);
  return factorial_ratio_root(r) / std::sqrt(rd) * std::exp2(-1.0 / (2.0 * rd + 1.0)) /
         std::numbers::pi;
}

}  // namespace

double tsang_upper_limit(std::int64_t r, double theta, Direction direction) {
  if (r < 1) throw DomainError("tsang_upper_limit: r must be at least 1");
  const double rd = static_cast<double>(r);
  const double shift = 1.0 + direction_sign(direction) * theta / std::sqrt(rd);
  if (shift < 0.0) throw DomainError("tsang_upper_limit: theta must stay below sqrt(r)");
  return 4.0 * std::numbers::pi * rd / (2.0 * rd + 1.0) * shift;
}

double tsang_rhs(std::int64_t r, double theta, Direction direction) {
  if (!std::isfinite(theta)) throw DomainError("tsang_rhs: theta must be finite");
  if (direction == Direction::Inf && theta >= std::sqrt(static_cast<double>(r))) {
    throw DomainError("tsang_rhs: Inf needs theta < sqrt(r)");
  }
  const double x = tsang_upper_limit(r, theta, direction);
  return moment_prefactor(r) * std::sqrt(sin_half_sq_integral(x));
}

BoundResult solve_theta_tsang(std::int64_t r, Direction direction) {
  if (r < 1) throw DomainError("solve_theta_tsang: r must be at least 1");
  const double cap = direction == Direction::Sup
                         ? 2.0
                         : std::min(2.0, 0.999 * std::sqrt(static_cast<double>(r)));
  const auto crossing = largest_strict_solution(
      [&](double theta) { return tsang_rhs(r, theta, direction); }, cap, kThetaScanStep,
      kThetaTol);
  return {crossing.theta, std::nullopt, crossing.margin, Method::Tsang};
}

TsangUniformCheck uniform_tsang_check(std::int64_t r_max, double theta_sup, double theta_inf) {
  if (r_max < kUniformMinR) throw DomainError("uniform_tsang_check: r_max must be at least 5");
  TsangUniformCheck out;
  out.sup_ok = true;
  out.inf_ok = true;
  const double floor_integral = std::sqrt(sin_half_sq_integral(2.0 * std::numbers::pi));
  double previous_inf = 0.0;
  for (std::int64_t r = kUniformMinR; r <= r_max; ++r) {
    const double inf_rhs = tsang_rhs(r, theta_inf, Direction::Inf);
    const double inf_margin = inf_rhs - theta_inf;
    if (r > kUniformMinR && inf_rhs < previous_inf) out.inf_ok = false;
    if (!(inf_margin > 0.0)) out.inf_ok = false;
    previous_inf = inf_rhs;

    const double sup_margin = tsang_rhs(r, theta_sup, Direction::Sup) - theta_sup;
    const bool above_threshold =
        tsang_upper_limit(r, theta_sup, Direction::Sup) >= 2.0 * std::numbers::pi;
    if (!above_threshold || !(sup_margin > 0.0)) out.sup_ok = false;
    if (out.sup_threshold_r == 0 && above_threshold &&
        moment_prefactor(r) * floor_integral > theta_sup) {
      out.sup_threshold_r = r;
    }

    if (r == kUniformMinR) {
      out.sup_worst_margin = sup_margin;
      out.inf_worst_margin = inf_margin;
    } else {
      out.sup_worst_margin = std::min(out.sup_worst_margin, sup_margin);
      out.inf_worst_margin = std::min(out.inf_worst_margin, inf_margin);
    }
  }
  return out;
}

std::vector<TsangRow> table2(std::int64_t r_max) {
  if (r_max < 1) throw DomainError("table2: r_max must be at least 1");
  std::vector<TsangRow> rows;
  rows.reserve(static_cast<std::size_t>(r_max));
  for (std::int64_t r = 1; r <= r_max; ++r) {
    const auto sup = solve_theta_tsang(r, Direction::Sup);
    const auto inf = solve_theta_tsang(r, Direction::Inf);
    rows.push_back({r, sup.theta, inf.theta, sup.margin, inf.margin});
  }
  return rows;
}

}  // namespace zgap
