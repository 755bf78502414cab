#include "doctest.h"

#include <cmath>
#include <numbers>

#include "zgap/errors.hpp"
#include "zgap/unconditional.hpp"

using namespace zgap;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Iterates theta <- rhs(theta); a contraction for small r^{beta-1}.
double fixed_point(const OscillationHypothesis& hyp, std::int64_t r, double sign) {
  double theta = 0.0;
  for (int i = 0; i < 200; ++i) {
    theta = hyp.c * std::pow(kTwoPi, hyp.beta) *
            std::pow(1.0 + sign * theta * std::pow(static_cast<double>(r), hyp.beta - 1.0), hyp.beta);
  }
  return theta;
}

}  // namespace

TEST_CASE("rvm_main_term") {
  CHECK(rvm_main_term(kTwoPi * std::numbers::e) == doctest::Approx(0.875));
  CHECK(rvm_main_term(100.0) == doctest::Approx(100.0 / kTwoPi * std::log(100.0 / (kTwoPi * std::numbers::e)) + 0.875));
  // N(100) = 29 and N(1000) = 649; the main term is within 1 of both.
  CHECK(std::abs(rvm_main_term(100.0) - 29.0) < 1.0);
  CHECK(std::abs(rvm_main_term(1000.0) - 649.0) < 1.0);
  CHECK_THROWS_AS(rvm_main_term(kTwoPi), DomainError);
  CHECK_THROWS_AS(rvm_main_term(1.0), DomainError);
}

TEST_CASE("count_increment_main") {
  CHECK(count_increment_main(1000.0, kTwoPi) == doctest::Approx(std::log(1000.0)));
  // Derivative of the main term is log(T / 2 pi) / 2 pi, close to log T / 2 pi.
  const double t = 5000.0;
  const double h = 1e-3;
  const double slope = (rvm_main_term(t + h) - rvm_main_term(t)) / h;
  CHECK(slope == doctest::Approx(std::log(t / kTwoPi) / kTwoPi).epsilon(1e-6));
  CHECK_THROWS_AS(count_increment_main(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(count_increment_main(100.0, 0.0), DomainError);
}

TEST_CASE("gap_window_scale and gap_theta_rhs") {
  const OscillationHypothesis hyp;
  CHECK(gap_window_scale(hyp, 8, 0.0, Direction::Sup) == 1.0);
  CHECK(gap_window_scale(hyp, 8, 1.0, Direction::Sup) == doctest::Approx(1.25));
  CHECK(gap_window_scale(hyp, 8, 1.0, Direction::Inf) == doctest::Approx(0.75));
  CHECK(gap_theta_rhs(hyp, 8, 0.0, Direction::Inf) == doctest::Approx(std::cbrt(kTwoPi)));
  CHECK_THROWS_AS(gap_theta_rhs(hyp, 1, 2.0, Direction::Inf), DomainError);
  CHECK_THROWS_AS(gap_theta_rhs({-1.0, 0.5}, 3, 0.1, Direction::Sup), DomainError);
  CHECK_THROWS_AS(gap_theta_rhs({1.0, 1.0}, 3, 0.1, Direction::Sup), DomainError);
  CHECK_THROWS_AS(gap_theta_rhs({1.0, 0.0}, 3, 0.1, Direction::Sup), DomainError);
  CHECK_THROWS_AS(gap_theta_rhs(hyp, 0, 0.1, Direction::Sup), DomainError);
}

TEST_CASE("solve_gap_theta") {
  SUBCASE("c = 0 gives 0") {
    const auto res = solve_gap_theta({0.0, 1.0 / 3.0}, 5, Direction::Sup);
    CHECK(res.theta == 0.0);
    CHECK(res.method == Method::Unconditional);
  }
  SUBCASE("large r tends to c (2 pi)^beta") {
    // theta - L = +-L^2 r^{-2/3} / 3 + O(r^{-4/3}) with L = (2 pi)^{1/3}.
    const double limit = std::cbrt(kTwoPi);
    for (std::int64_t r : {1'000'000, 1'000'000'000}) {
      const double eps = std::pow(static_cast<double>(r), -2.0 / 3.0);
      const auto sup = solve_gap_theta({}, r, Direction::Sup);
      const auto inf = solve_gap_theta({}, r, Direction::Inf);
      CHECK(sup.theta - limit == doctest::Approx(limit * limit * eps / 3.0).epsilon(1e-3));
      CHECK(limit - inf.theta == doctest::Approx(limit * limit * eps / 3.0).epsilon(1e-3));
      CHECK_FALSE(sup.ell.has_value());
    }
  }
  SUBCASE("agrees with fixed-point iteration") {
    for (std::int64_t r : {8, 27, 1000}) {
      for (double c : {0.2, 1.0}) {
        const OscillationHypothesis hyp{c, 1.0 / 3.0};
        CAPTURE(r);
        CAPTURE(c);
        CHECK(solve_gap_theta(hyp, r, Direction::Sup).theta ==
              doctest::Approx(fixed_point(hyp, r, 1.0)).epsilon(1e-10));
        CHECK(solve_gap_theta(hyp, r, Direction::Inf).theta ==
              doctest::Approx(fixed_point(hyp, r, -1.0)).epsilon(1e-10));
      }
    }
  }
  SUBCASE("beta = 1/2, r = 1, c = 1 solves theta^2 = 2 pi (1 + theta)") {
    const auto res = solve_gap_theta({1.0, 0.5}, 1, Direction::Sup);
    const double pi = std::numbers::pi;
    CHECK(res.theta == doctest::Approx(pi + std::sqrt(pi * pi + 2.0 * pi)).epsilon(1e-11));
  }
  SUBCASE("strict inequality and maximality") {
    for (auto dir : {Direction::Sup, Direction::Inf}) {
      const OscillationHypothesis hyp{0.7, 0.4};
      const auto res = solve_gap_theta(hyp, 12, dir);
      CHECK(res.margin > 0.0);
      CHECK(res.theta < gap_theta_rhs(hyp, 12, res.theta, dir));
      const double above = res.theta + 1e-6;
      CHECK(above >= gap_theta_rhs(hyp, 12, above, dir));
    }
  }
}

TEST_CASE("solve_gap_theta is monotone in c and ordered by direction") {
  double prev_sup = -1.0;
  double prev_inf = -1.0;
  for (int i = 0; i < 10; ++i) {
    const OscillationHypothesis hyp{0.1 + 0.2 * i, 1.0 / 3.0};
    const double sup = solve_gap_theta(hyp, 20, Direction::Sup).theta;
    const double inf = solve_gap_theta(hyp, 20, Direction::Inf).theta;
    CHECK(sup > prev_sup);
    CHECK(inf > prev_inf);
    CHECK(inf < sup);
    prev_sup = sup;
    prev_inf = inf;
  }
}

TEST_CASE("solve_gap_theta in r") {
  // The Sup value decreases and the Inf value increases toward the common limit.
  double prev_sup = 1e9;
  double prev_inf = 0.0;
  for (std::int64_t r : {2, 5, 20, 100, 1000, 100000}) {
    const double sup = solve_gap_theta({}, r, Direction::Sup).theta;
    const double inf = solve_gap_theta({}, r, Direction::Inf).theta;
    CHECK(sup < prev_sup);
    CHECK(inf > prev_inf);
    prev_sup = sup;
    prev_inf = inf;
  }
}
