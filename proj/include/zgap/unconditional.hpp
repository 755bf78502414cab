#pragma once

#include <cstdint>

#include "zgap/bounds.hpp"

namespace zgap {

/// Omega-result for short-interval variations of S(t):
///   sup_{t in [T, 2T]} +-(S(t + h) - S(t)) >= c (h log T)^beta.
/// beta = 1/3 holds unconditionally, 1/2 under RH.
struct OscillationHypothesis {
  double c = 1.0;
  double beta = 1.0 / 3.0;
};

/// (T / 2 pi) log(T / (2 pi e)) + 7/8. Throws DomainError for T <= 2 pi.
double rvm_main_term(double t);

/// (h / 2 pi) log t, the main term of N(t + h) - N(t). Needs t > e and h > 0.
double count_increment_main(double t, double h);

/// c (2 pi)^beta (1 +- theta r^{beta - 1})^beta: the largest theta for which
/// a window h = (2 pi r / log T)(1 +- theta / r^{1 - beta}) is forced to
/// contain fewer (Sup) or more (Inf) than r zeros in the T -> infinity limit.
double gap_theta_rhs(const OscillationHypothesis& hyp, std::int64_t r, double theta,
                     Direction direction);

/// h / (2 pi r / log T) = 1 +- theta / r^{1 - beta}.
double gap_window_scale(const OscillationHypothesis& hyp, std::int64_t r, double theta,
                        Direction direction);

/// Largest theta with theta < gap_theta_rhs(theta). Zero when c == 0.
BoundResult solve_gap_theta(const OscillationHypothesis& hyp, std::int64_t r,
                            Direction direction);

}  // namespace zgap
