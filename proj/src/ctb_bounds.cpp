#include "zgap/ctb_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "zgap/constants.hpp"
#include "zgap/errors.hpp"
#include "zgap/optimize.hpp"

namespace zgap {
namespace {

constexpr double kThetaTol = 1e-6;
constexpr double kThetaScanStep = 0.1;
constexpr double kEllMin = 1.0;
constexpr double kEllMax = 12.0;
constexpr double kEllGridStep = 0.25;
constexpr double kEllRefineWidth = 1e-4;
constexpr std::int64_t kClosedFormMinR = 8;

void require_r(std::int64_t r, const char* who) {
  if (r < 1) throw DomainError(std::string(who) + ": r must be at least 1");
}

void require_closed_form_args(std::int64_t r, double theta, const char* who) {
  if (r < kClosedFormMinR) {
    throw DomainError(std::string(who) + ": closed form needs r >= 8");
  }
  if (!(std::abs(theta) <= 1.0)) {
    throw DomainError(std::string(who) + ": closed form needs |theta| <= 1");
  }
}

// sqrt(r +- theta sqrt(r))
double shifted_root(std::int64_t r, double theta, Direction direction) {
  const double rd = static_cast<double>(r);
  return std::sqrt(rd + direction_sign(direction) * theta * std::sqrt(rd));
}

double exponential_error_terms(double q) {
  const double b0 = saddle_constants().argmax;
  return std::exp(-b0 * q) / std::numbers::pi + 1.0 / (b0 * b0 * b0 * q);
}

}  // namespace

double ctb_rhs(std::int64_t r, double theta, double ell, Direction direction, double tol) {
  require_r(r, "ctb_rhs");
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw DomainError("ctb_rhs: ell must be positive and finite");
  }
  if (!std::isfinite(theta)) throw DomainError("ctb_rhs: theta must be finite");
  const double root_r = std::sqrt(static_cast<double>(r));
  const double frequency = static_cast<double>(r) + direction_sign(direction) * theta * root_r;
  if (frequency == 0.0) return 0.0;
  if (frequency < 0.0) {
    throw DomainError("ctb_rhs: frequency r +- theta sqrt(r) must be nonnegative");
  }
  const auto integral = integrate_oscillatory(frequency, ell * ell, tol);
  return 2.0 * ell / root_r * integral.value;
}

double ctb_theta_cap(std::int64_t r, Direction direction) {
  require_r(r, "ctb_theta_cap");
  if (direction == Direction::Sup) return 2.0;
  return std::min(2.0, 0.999 * std::sqrt(static_cast<double>(r)));
}

BoundResult solve_theta(std::int64_t r, double ell, Direction direction, double tol) {
  require_r(r, "solve_theta");
  if (!(ell >= kEllMin)) throw DomainError("solve_theta: ell must be at least 1");
  const auto crossing = largest_strict_solution(
      [&](double theta) { return ctb_rhs(r, theta, ell, direction, tol); },
      ctb_theta_cap(r, direction), kThetaScanStep, kThetaTol);
  return {crossing.theta, ell, crossing.margin, Method::CtbIntegral};
}

BoundResult optimize_ell(std::int64_t r, Direction direction, double tol) {
  require_r(r, "optimize_ell");
  const auto n_grid = static_cast<int>(std::lround((kEllMax - kEllMin) / kEllGridStep));
  BoundResult best;
  int best_index = 0;
  for (int i = 0; i <= n_grid; ++i) {
    const double ell = kEllMin + i * kEllGridStep;
    const auto candidate = solve_theta(r, ell, direction, tol);
    if (i == 0 || candidate.theta > best.theta) {
      best = candidate;
      best_index = i;
    }
  }

  const double lo = kEllMin + std::max(0, best_index - 1) * kEllGridStep;
  const double hi = kEllMin + std::min(n_grid, best_index + 1) * kEllGridStep;
  const auto refined = golden_section_maximize(
      [&](double ell) { return solve_theta(r, ell, direction, tol).theta; }, lo, hi,
      kEllRefineWidth);
  const auto polished = solve_theta(r, refined.x, direction, tol);
  if (polished.theta > best.theta) best = polished;
  return best;
}

double closed_form_brace(std::int64_t r, double theta, Direction direction) {
  require_closed_form_args(r, theta, "closed_form_brace");
  const double a0 = saddle_constants().value;
  const double root_r = std::sqrt(static_cast<double>(r));
  const double q = shifted_root(r, theta, direction);
  const double errors = exponential_error_terms(q);
  if (direction == Direction::Sup) {
    return theta / (std::sqrt(1.0 + theta / root_r) + 1.0) * a0 - 4.0 * errors;
  }
  return (1.0 - std::sqrt(1.0 - theta / root_r)) * a0 + 4.0 / root_r * errors;
}

double closed_form_rhs(std::int64_t r, double theta, Direction direction) {
  const double brace = closed_form_brace(r, theta, direction);
  const double a0 = saddle_constants().value;
  if (direction == Direction::Sup) {
    return a0 + brace / std::sqrt(static_cast<double>(r));
  }
  return a0 - brace;
}

double closed_form_ell(std::int64_t r, double theta, Direction direction) {
  require_closed_form_args(r, theta, "closed_form_ell");
  return saddle_constants().argmax * shifted_root(r, theta, direction);
}

UniformCheck uniform_check(Direction direction, double theta_const, std::int64_t r_max) {
  if (r_max < kClosedFormMinR || r_max > 1'000'000) {
    throw DomainError("uniform_check: r_max must lie in [8, 1e6]");
  }
  UniformCheck out;
  out.passed = true;
  out.brace_monotone = true;
  double previous_brace = 0.0;
  for (std::int64_t r = kClosedFormMinR; r <= r_max; ++r) {
    const double margin = closed_form_rhs(r, theta_const, direction) - theta_const;
    if (r == kClosedFormMinR || margin < out.worst_margin) {
      out.worst_margin = margin;
      out.worst_r = r;
    }
    if (!(margin > 0.0)) out.passed = false;

    const double brace = closed_form_brace(r, theta_const, direction);
    if (r > kClosedFormMinR) {
      const bool ordered = direction == Direction::Sup ? brace > previous_brace
                                                       : brace < previous_brace;
      if (!ordered) out.brace_monotone = false;
    }
    previous_brace = brace;
  }
  return out;
}

std::vector<Table1Row> table1(std::int64_t r_max, double tol) {
  if (r_max < 1) throw DomainError("table1: r_max must be at least 1");
  std::vector<std::future<Table1Row>> pending;
  pending.reserve(static_cast<std::size_t>(r_max));
  for (std::int64_t r = 1; r <= r_max; ++r) {
    pending.push_back(std::async(std::launch::async, [r, tol] {
      return Table1Row{r, optimize_ell(r, Direction::Sup, tol),
                       optimize_ell(r, Direction::Inf, tol)};
    }));
  }
  std::vector<Table1Row> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace zgap
