#pragma once

#include <cmath>
#include <cstdint>

namespace zgap {

struct ScalarOptimum {
  double x = 0.0;
  double f = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi],
/// stopping once the bracket is narrower than width_tol.
template <class F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double width_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > width_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc > fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

struct Crossing {
  double theta = 0.0;
  double margin = 0.0;  // rhs(theta) - theta, > 0 unless theta == 0 and no solution
};

/// Largest theta in [0, cap] with theta < rhs(theta).
///
/// The margin g(theta) = rhs(theta) - theta is sampled downward from cap in
/// steps of scan_step; the first positive sample and its upper neighbour
/// bracket the crossing, which is then bisected to within tol. The returned
/// theta always sits on the g > 0 side of the bracket. If no sample is
/// positive the result is {0, 0}.
template <class Rhs>
Crossing largest_strict_solution(Rhs&& rhs, double cap, double scan_step, double tol) {
  auto margin = [&](double t) { return rhs(t) - t; };
  const double g_cap = margin(cap);
  if (g_cap > 0.0) return {cap, g_cap};

  const auto n_steps = static_cast<std::int64_t>(std::ceil(cap / scan_step));
  double bad = cap;
  double good = -1.0;
  double g_good = 0.0;
  for (std::int64_t i = n_steps - 1; i >= 0; --i) {
    const double t = static_cast<double>(i) * scan_step;
    const double g = margin(t);
    if (g > 0.0) {
      good = t;
      g_good = g;
      break;
    }
    bad = t;
  }
  if (good < 0.0) return {0.0, 0.0};

  while (bad - good > tol) {
    const double mid = 0.5 * (good + bad);
    const double g = margin(mid);
    if (g > 0.0) {
      good = mid;
      g_good = g;
    } else {
      bad = mid;
    }
  }
  return {good, g_good};
}

}  // namespace zgap
