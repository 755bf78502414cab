#include "zgap/unconditional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zgap/errors.hpp"

namespace zgap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const OscillationHypothesis& hyp, std::int64_t r) {
  if (!(hyp.c >= 0.0) || !std::isfinite(hyp.c)) {
    throw DomainError("oscillation constant c must be finite and nonnegative");
  }
  if (!(hyp.beta > 0.0 && hyp.beta < 1.0)) {
    throw DomainError("oscillation exponent beta must lie in (0, 1)");
  }
  if (r < 1) throw DomainError("r must be at least 1");
}

}  // namespace

double rvm_main_term(double t) {
  if (!(t > kTwoPi) || !std::isfinite(t)) {
    throw DomainError("rvm_main_term: T must exceed 2 pi");
  }
  return t / kTwoPi * std::log(t / (kTwoPi * std::numbers::e)) + 7.0 / 8.0;
}

double count_increment_main(double t, double h) {
  if (!(t > std::numbers::e) || !std::isfinite(t)) {
    throw DomainError("count_increment_main: t must exceed e");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("count_increment_main: h must be positive");
  }
  return h / kTwoPi * std::log(t);
}

double gap_window_scale(const OscillationHypothesis& hyp, std::int64_t r, double theta,
                        Direction direction) {
  validate(hyp, r);
  return 1.0 + direction_sign(direction) * theta *
                   std::pow(static_cast<double>(r), hyp.beta - 1.0);
}

double gap_theta_rhs(const OscillationHypothesis& hyp, std::int64_t r, double theta,
                     Direction direction) {
  const double scale = gap_window_scale(hyp, r, theta, direction);
  if (scale < 0.0) throw DomainError("gap_theta_rhs: window length would be negative");
  return hyp.c * std::pow(kTwoPi, hyp.beta) * std::pow(scale, hyp.beta);
}

BoundResult solve_gap_theta(const OscillationHypothesis& hyp, std::int64_t r,
                            Direction direction) {
  validate(hyp, r);
  BoundResult out;
  out.method = Method::Unconditional;
  if (hyp.c == 0.0) return out;

  auto margin = [&](double theta) { return gap_theta_rhs(hyp, r, theta, direction) - theta; };

  // margin is concave in theta and positive at 0, so one sign change.
  double lo = 0.0;
  double hi;
  if (direction == Direction::Inf) {
    hi = std::pow(static_cast<double>(r), 1.0 - hyp.beta);  // window shrinks to 0
  } else {
    hi = std::max(1.0, hyp.c * std::pow(kTwoPi, hyp.beta));
    while (margin(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
    }
  }
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.theta = lo;
  out.margin = margin(lo);
  return out;
}

}  // namespace zgap
