#include "zgap/special_math.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "zgap/errors.hpp"

namespace zgap {
namespace {

constexpr int kGaussOrder = 15;
constexpr int kMaxPanelDepth = 40;

struct GaussLegendre {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre make_gauss_legendre() {
  GaussLegendre rule;
  constexpr int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule = make_gauss_legendre();
  return rule;
}

class OscillatoryIntegrand {
 public:
  OscillatoryIntegrand(double a, double s)
      : a_(a), s_(s), series_cut_(1e-4 / a) {}

  double operator()(double v) const {
    double kernel;
    if (v < series_cut_) {
      // sin(pi a v) / (pi v) = a (1 - x^2/6 + x^4/120 - ...), x = pi a v
      const double x = std::numbers::pi * a_ * v;
      const double x2 = x * x;
      kernel = a_ * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0));
    } else {
      kernel = std::sin(std::numbers::pi * a_ * v) / (std::numbers::pi * v);
    }
    if (s_ == 0.0) return kernel;
    if (v >= 1.0) return 0.0;
    return kernel * std::exp(s_ * std::log1p(-v));
  }

  /// Bound on |f| integrated over [v, 1].
  double tail_bound(double v) const {
    const double width = 1.0 - v;
    if (width <= 0.0) return 0.0;
    if (s_ == 0.0) return width * std::min(a_, 1.0 / (std::numbers::pi * v));
    const double decay = std::exp((s_ + 1.0) * std::log1p(-v)) / (s_ + 1.0);
    return decay * std::min(a_, 1.0 / (std::numbers::pi * v));
  }

 private:
  double a_;
  double s_;
  double series_cut_;
};

struct PanelState {
  double value = 0.0;
  double abs_error = 0.0;
  double abs_sum = 0.0;  // sum of |leaf contributions|, scales the rounding floor
  std::int64_t n_evals = 0;
  std::int64_t panels_left = 0;
};

double gauss_panel(const OscillatoryIntegrand& f, double lo, double hi,
                   std::int64_t& n_evals) {
  const auto& rule = gauss_legendre();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  n_evals += kGaussOrder;
  return half * sum;
}

void integrate_panel(const OscillatoryIntegrand& f, double lo, double hi,
                     double whole, double tol_per_width, int depth,
                     PanelState& state) {
  const double mid = 0.5 * (lo + hi);
  const double left = gauss_panel(f, lo, mid, state.n_evals);
  const double right = gauss_panel(f, mid, hi, state.n_evals);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  --state.panels_left;
  if (err <= tol_per_width * (hi - lo) || depth >= kMaxPanelDepth ||
      state.panels_left <= 0) {
    state.value += refined;
    state.abs_error += err;
    state.abs_sum += std::abs(left) + std::abs(right);
    return;
  }
  integrate_panel(f, lo, mid, left, tol_per_width, depth + 1, state);
  integrate_panel(f, mid, hi, right, tol_per_width, depth + 1, state);
}

// sum_{k>=1} (-1)^{k+1} x^{2k} / (2 * 2k * (2k)!)
double sin_half_sq_series(double x) {
  const double x2 = x * x;
  double term = x2 / 2.0;  // x^{2k} / (2k)! at k = 1
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    const double contrib = term / (4.0 * k);
    sum += (k % 2 == 1) ? contrib : -contrib;
    if (contrib < 1e-18 * std::abs(sum)) break;
    term *= x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return sum;
}

// Ci(x) for x > 2 from the continued fraction of E1(ix).
double cosine_integral_cf(double x) {
  using cplx = std::complex<double>;
  constexpr double kTiny = 1e-300;
  cplx b(1.0, x);
  cplx c(1.0 / kTiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 1000; ++i) {
    const double an = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  h *= cplx(std::cos(x), -std::sin(x));
  return -h.real();
}

}  // namespace

QuadratureEstimate integrate_oscillatory(double a, double s, double abs_tol) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw DomainError("integrate_oscillatory: frequency must be finite and positive");
  }
  if (!std::isfinite(s) || s < 0.0) {
    throw DomainError("integrate_oscillatory: exponent must be finite and nonnegative");
  }
  if (!(abs_tol > 0.0)) {
    throw DomainError("integrate_oscillatory: tolerance must be positive");
  }

  const OscillatoryIntegrand f(a, s);
  PanelState state;
  state.panels_left = static_cast<std::int64_t>(std::max(1e5, 20.0 * a));

  // Sign changes of the sine sit at k / a; the last panel ends at 1.
  const auto n_half_periods = static_cast<std::int64_t>(std::ceil(a));
  const double tail_target = 1e-3 * abs_tol;
  double lo = 0.0;
  for (std::int64_t k = 1; k <= n_half_periods && lo < 1.0; ++k) {
    const double hi = std::min(1.0, static_cast<double>(k) / a);
    if (hi <= lo) continue;
    if (state.panels_left <= 0) {
      state.abs_error += f.tail_bound(lo);
      break;
    }
    const double whole = gauss_panel(f, lo, hi, state.n_evals);
    integrate_panel(f, lo, hi, whole, abs_tol, 0, state);
    lo = hi;
    if (lo < 1.0 && s > 0.0) {
      const double tail = f.tail_bound(lo);
      if (tail < tail_target) {
        state.abs_error += tail;
        break;
      }
    }
  }
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * state.abs_sum;
  return {state.value, state.abs_error + rounding, std::max<std::int64_t>(state.n_evals, 1)};
}

double sin_half_sq_integral(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("sin_half_sq_integral: argument must be finite and nonnegative");
  }
  if (x == 0.0) return 0.0;
  if (x <= 4.0) return sin_half_sq_series(x);
  return 0.5 * (std::numbers::egamma + std::log(x) - cosine_integral_cf(x));
}

double factorial_ratio_root(std::int64_t r) {
  if (r < 1) throw DomainError("factorial_ratio_root: r must be at least 1");
  const double rd = static_cast<double>(r);
  return std::exp((std::lgamma(2.0 * rd + 1.0) - std::lgamma(rd + 1.0)) / (2.0 * rd));
}

}  // namespace zgap
