#include "zgap/zero_data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string_view>
#include <thread>

#include "zgap/errors.hpp"
#include "zgap/unconditional.hpp"

namespace zgap {
namespace {

#include "riemann_siegel_coeffs.inc"

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHardyZMin = 10.0;
constexpr double kHardyZMax = 1e5;
constexpr double kScanMax = 1e4;
constexpr double kScanStep = 0.05;
constexpr int kNearMissSubdivisions = 32;
constexpr double kBisectTol = 1e-9;

template <std::size_t N>
double horner(const std::array<double, N>& c, double z) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<double> sample_hardy_Z(const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
    const std::size_t end = std::min(grid.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) values[i] = hardy_Z(grid[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return values;
}

double bisect_sign_change(double lo, double hi, double z_lo) {
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_Z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid > 0.0) == (z_lo > 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Adds the zeros of [lo, hi] found on a uniform sub-grid.
void scan_window(double lo, double hi, int steps, std::vector<double>& out) {
  double t_prev = lo;
  double z_prev = hardy_Z(lo);
  for (int i = 1; i <= steps; ++i) {
    const double t = lo + (hi - lo) * i / steps;
    const double z = hardy_Z(t);
    if (z_prev == 0.0) {
      out.push_back(t_prev);
    } else if (z != 0.0 && (z > 0.0) != (z_prev > 0.0)) {
      out.push_back(bisect_sign_change(t_prev, t, z_prev));
    }
    t_prev = t;
    z_prev = z;
  }
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, ZeroSource source, double t_min,
                     double t_max, bool complete_from_origin)
    : ordinates_(std::move(ordinates)),
      source_(source),
      t_min_(t_min),
      t_max_(t_max),
      complete_from_origin_(complete_from_origin) {
  if (!(t_min_ <= t_max_)) throw ValidationError("zero table: t_min exceeds t_max");
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    const double g = ordinates_[i];
    if (!std::isfinite(g) || g <= 0.0) {
      throw ValidationError("zero table: ordinate " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && g < ordinates_[i - 1]) {
      throw ValidationError("zero table: ordinates not ascending at index " +
                            std::to_string(i));
    }
  }
  if (!ordinates_.empty() && (ordinates_.front() < t_min_ || ordinates_.back() > t_max_)) {
    throw ValidationError("zero table: ordinates outside [t_min, t_max]");
  }
}

ZeroTable parse_zeros(std::istream& in, const std::string& origin) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t previous_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw FormatError(origin + ":" + std::to_string(line_no) + ": cannot parse '" +
                            std::string(text) + "' as an ordinate",
                        line_no);
    }
    if (!std::isfinite(value) || value <= 0.0) {
      throw ValidationError(origin + ":" + std::to_string(line_no) +
                                ": ordinate must be positive and finite",
                            line_no);
    }
    if (!values.empty() && value < values.back()) {
      throw ValidationError(origin + ":" + std::to_string(line_no) +
                                ": ordinate is smaller than the one on line " +
                                std::to_string(previous_line),
                            line_no);
    }
    values.push_back(value);
    previous_line = line_no;
  }
  if (values.empty()) throw ValidationError(origin + ": no ordinates found");
  const double lo = values.front();
  const double hi = values.back();
  const bool from_origin = std::abs(lo - kFirstZeroOrdinate) < 1e-3;
  return ZeroTable(std::move(values), ZeroSource::File, lo, hi, from_origin);
}

ZeroTable load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open zero file '" + path.string() + "'");
  return parse_zeros(in, path.string());
}

void write_zeros(std::ostream& out, const ZeroTable& zeros) {
  char buf[64];
  out << "# zeta zero ordinates, t in [" << zeros.t_min() << ", " << zeros.t_max() << "]\n";
  for (const double g : zeros.ordinates()) {
    std::snprintf(buf, sizeof buf, "%.12f\n", g);
    out << buf;
  }
}

double riemann_siegel_theta(double t) {
  const double t2 = t * t;
  return t / 2.0 * std::log(t / kTwoPi) - t / 2.0 - std::numbers::pi / 8.0 +
         1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2);
}

double hardy_Z(double t) {
  if (!(t >= kHardyZMin && t <= kHardyZMax)) {
    throw DomainError("hardy_Z: t must lie in [10, 1e5]");
  }
  const double tau = t / kTwoPi;
  const double root = std::sqrt(tau);
  const auto n_terms = static_cast<int>(root);
  const double frac = root - n_terms;
  const double theta = riemann_siegel_theta(t);

  double main_sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    main_sum += std::cos(theta - t * std::log(static_cast<double>(n))) /
                std::sqrt(static_cast<double>(n));
  }

  const double z = 2.0 * frac - 1.0;
  const double w = 1.0 / root;  // tau^{-1/2}
  const double remainder =
      horner(kC0, z) +
      w * (horner(kC1, z) + w * (horner(kC2, z) + w * (horner(kC3, z) + w * horner(kC4, z))));
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return 2.0 * main_sum + sign * std::pow(tau, -0.25) * remainder;
}

ZeroTable find_zeros(double t_min, double t_max) {
  if (!(t_min >= kHardyZMin && t_min < t_max && t_max <= kScanMax)) {
    throw DomainError("find_zeros: need 10 <= t_min < t_max <= 1e4");
  }
  const auto n_steps =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((t_max - t_min) / kScanStep)));
  std::vector<double> grid(static_cast<std::size_t>(n_steps) + 1);
  for (std::int64_t i = 0; i <= n_steps; ++i) {
    grid[i] = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(n_steps);
  }
  grid.back() = t_max;
  const auto values = sample_hardy_Z(grid);

  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double za = values[i];
    const double zb = values[i + 1];
    if (za == 0.0) {
      zeros.push_back(grid[i]);
    } else if (zb != 0.0 && (za > 0.0) != (zb > 0.0)) {
      zeros.push_back(bisect_sign_change(grid[i], grid[i + 1], za));
    } else if (i > 0 && zb != 0.0 && (values[i - 1] > 0.0) == (za > 0.0) &&
               (za > 0.0) == (zb > 0.0) && std::abs(za) < std::abs(values[i - 1]) &&
               std::abs(za) < std::abs(zb)) {
      // |Z| dips without a sign change: a close pair may hide in the window.
      std::vector<double> hidden;
      scan_window(grid[i - 1], grid[i + 1], kNearMissSubdivisions, hidden);
      zeros.insert(zeros.end(), hidden.begin(), hidden.end());
    }
  }
  if (values.back() == 0.0) zeros.push_back(grid.back());

  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end(),
                          [](double a, double b) { return std::abs(a - b) < 10 * kBisectTol; }),
              zeros.end());
  const bool from_origin = t_min < kFirstZeroOrdinate;
  return ZeroTable(std::move(zeros), ZeroSource::Computed, t_min, t_max, from_origin);
}

std::vector<double> normalized_gaps(const ZeroTable& zeros, std::int64_t r) {
  if (r < 1) throw DomainError("normalized_gaps: r must be at least 1");
  const auto g = zeros.ordinates();
  if (static_cast<std::int64_t>(g.size()) <= r) {
    throw ValidationError("normalized_gaps: need more than r = " + std::to_string(r) +
                          " ordinates, have " + std::to_string(g.size()));
  }
  const auto ru = static_cast<std::size_t>(r);
  std::vector<double> out(g.size() - ru);
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = (g[n + ru] - g[n]) * std::log(g[n]) / (kTwoPi * static_cast<double>(r));
  }
  return out;
}

GapStatistics gap_extrema(const ZeroTable& zeros, std::int64_t r) {
  const auto gaps = normalized_gaps(zeros, r);
  const auto [min_it, max_it] = std::minmax_element(gaps.begin(), gaps.end());
  GapStatistics s;
  s.r = r;
  s.count = static_cast<std::int64_t>(gaps.size());
  s.min_normalized = *min_it;
  s.max_normalized = *max_it;
  s.argmin_index = min_it - gaps.begin();
  s.argmax_index = max_it - gaps.begin();
  s.mean_normalized = std::accumulate(gaps.begin(), gaps.end(), 0.0) /
                      static_cast<double>(gaps.size());
  return s;
}

double empirical_S(double t, const ZeroTable& zeros) {
  if (!zeros.complete_from_origin()) {
    throw ValidationError("empirical_S: zero table does not start at the first zero");
  }
  if (t > zeros.t_max()) {
    throw ValidationError("empirical_S: T lies beyond the covered range of the zero table");
  }
  const auto g = zeros.ordinates();
  const auto count = std::upper_bound(g.begin(), g.end(), t) - g.begin();
  return static_cast<double>(count) - rvm_main_term(t);
}

}  // namespace zgap
