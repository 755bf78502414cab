#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zgap/errors.hpp"
#include "zgap/special_math.hpp"

using namespace zgap;

TEST_CASE("integrate_oscillatory rejects bad arguments") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(integrate_oscillatory(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory(-2.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory(nan, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory(inf, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory(1.0, -0.5), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("integrate_oscillatory vanishes as the frequency goes to zero") {
  for (double s : {0.0, 2.0, 144.0}) {
    const auto q = integrate_oscillatory(1e-9, s);
    CHECK(std::abs(q.value) < 1e-8);
    CHECK(q.abs_error >= 0.0);
    CHECK(q.n_evals >= 1);
  }
}

TEST_CASE("integrate_oscillatory at a = 1, s = 0 is Si(pi)/pi") {
  const auto q = integrate_oscillatory(1.0, 0.0);
  // Frozen from a 1e7-panel midpoint sum.
  const double brute = oracle::oscillatory_midpoint(1.0, 0.0, 10'000'000);
  CHECK(brute == doctest::Approx(0.589490).epsilon(1e-6));
  CHECK(std::abs(q.value - brute) < 1e-10);
  CHECK(std::abs(q.value - oracle::sine_integral_over_pi(1.0)) <= q.abs_error + 1e-15);
}

TEST_CASE("abs_error covers the true error for closed forms") {
  SUBCASE("s = 0 against the sine integral") {
    for (double a : {0.3, 1.0, 2.5, 17.2, 333.0, 1e4}) {
      const auto q = integrate_oscillatory(a, 0.0);
      const double exact = oracle::sine_integral_over_pi(a);
      CHECK(std::abs(q.value - exact) <= q.abs_error + 1e-14);
      CHECK(std::abs(q.value - exact) < 1e-9);
    }
  }
  SUBCASE("s = 1: Si(pi a)/pi - (1 - cos(pi a)) / (pi^2 a)") {
    for (double a : {1.0, 3.7, 40.0}) {
      const auto q = integrate_oscillatory(a, 1.0);
      const double pa = std::numbers::pi * a;
      const double exact = oracle::sine_integral_over_pi(a) - (1.0 - std::cos(pa)) / (std::numbers::pi * pa);
      CHECK(std::abs(q.value - exact) <= q.abs_error + 1e-14);
    }
  }
}

TEST_CASE("integrate_oscillatory returns an honest error when the panel budget runs out") {
  const auto q = integrate_oscillatory(3.0, 2.0, 1e-300);
  const auto ref = integrate_oscillatory(3.0, 2.0);
  CHECK(std::isfinite(q.value));
  CHECK(q.abs_error >= 0.0);
  CHECK(std::abs(q.value - ref.value) <= q.abs_error + ref.abs_error);
}

TEST_CASE("integrate_oscillatory matches the midpoint oracle on random inputs") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> freq(0.05, 100.0);
  std::uniform_real_distribution<double> expo(0.0, 400.0);
  for (int i = 0; i < 8; ++i) {
    const double a = freq(rng);
    const double s = expo(rng);
    const double brute = oracle::oscillatory_midpoint(a, s, 4'000'000);
    CAPTURE(a);
    CAPTURE(s);
    CHECK(std::abs(integrate_oscillatory(a, s).value - brute) < 1e-8);
  }
}

TEST_CASE("sin_half_sq_integral edge cases") {
  CHECK(sin_half_sq_integral(0.0) == 0.0);
  CHECK_THROWS_AS(sin_half_sq_integral(-1e-3), DomainError);
  CHECK_THROWS_AS(sin_half_sq_integral(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(sin_half_sq_integral(std::numeric_limits<double>::quiet_NaN()), DomainError);
  // integrand ~ u/4 near 0
  CHECK(sin_half_sq_integral(1e-4) == doctest::Approx(1e-8 / 8.0).epsilon(1e-6));
}

TEST_CASE("sin_half_sq_integral at 2 pi matches the cosine-integral identity") {
  const double x = 2.0 * std::numbers::pi;
  const double value = sin_half_sq_integral(x);
  CHECK(std::abs(value - oracle::sin_half_sq_midpoint(x, 2'000'000)) < 1e-10);
  CHECK(std::abs(value - oracle::sin_half_sq_identity(x)) < 1e-12);
}

TEST_CASE("sin_half_sq_integral agrees with both oracles across the series/continued-fraction seam") {
  for (double x : {0.5, 1.0, 3.0, 3.999, 4.0, 4.001, 6.0, 12.0, 25.0, 50.0, 400.0}) {
    CAPTURE(x);
    CHECK(std::abs(sin_half_sq_integral(x) - oracle::sin_half_sq_identity(x)) < 1e-12);
  }
  for (double x : {3.5, 4.5, 9.0, 20.0}) {
    CAPTURE(x);
    CHECK(std::abs(sin_half_sq_integral(x) - oracle::sin_half_sq_midpoint(x, 1'000'000)) < 1e-10);
  }
}

TEST_CASE("sin_half_sq_integral is nondecreasing and under (gamma + ln x + 1)/2") {
  double previous = 0.0;
  for (int i = 1; i <= 20000; ++i) {
    const double x = 0.005 * i;
    const double v = sin_half_sq_integral(x);
    CHECK_MESSAGE(v >= previous, "x = " << x);
    if (x >= 1.0) CHECK(v <= 0.5 * (std::numbers::egamma + std::log(x) + 1.0));
    previous = v;
  }
}

TEST_CASE("factorial_ratio_root") {
  CHECK_THROWS_AS(factorial_ratio_root(0), DomainError);
  CHECK_THROWS_AS(factorial_ratio_root(-3), DomainError);
  CHECK(factorial_ratio_root(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(factorial_ratio_root(2) == doctest::Approx(std::pow(12.0, 0.25)).epsilon(1e-14));

  // (340)! / 170! overflows a double; the root does not.
  const double r170 = factorial_ratio_root(170);
  CHECK(std::isfinite(r170));
  for (std::int64_t r : {3, 10, 170, 999, 4321, 10000}) {
    const double expected =
        static_cast<double>(std::exp(oracle::log_factorial_ratio(r) / (2.0L * r)));
    CAPTURE(r);
    CHECK(std::abs(factorial_ratio_root(r) / expected - 1.0) < 1e-12);
  }
}

TEST_CASE("r^{-1/2} factorial_ratio_root(r) decreases strictly toward 2 / sqrt(e)") {
  const double limit = 2.0 / std::sqrt(std::numbers::e);
  double previous = 2.0;
  for (std::int64_t r = 1; r <= 10000; ++r) {
    const double v = factorial_ratio_root(r) / std::sqrt(static_cast<double>(r));
    CHECK_MESSAGE(v < previous, "r = " << r);
    CHECK_MESSAGE(v > limit, "r = " << r);
    previous = v;
  }
  CHECK(previous - limit < 1e-3);
}
