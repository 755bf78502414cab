#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace zgap {

enum class ZeroSource { File, Computed };

/// Ascending ordinates of zeta zeros on the critical line. Immutable.
class ZeroTable {
 public:
  /// Throws ValidationError when the ordinates are not positive and
  /// nondecreasing, or fall outside [t_min, t_max].
  ZeroTable(std::vector<double> ordinates, ZeroSource source, double t_min, double t_max,
            bool complete_from_origin);

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  ZeroSource source() const noexcept { return source_; }
  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }

  /// True when every zero with ordinate in (0, t_max] is present.
  bool complete_from_origin() const noexcept { return complete_from_origin_; }

 private:
  std::vector<double> ordinates_;
  ZeroSource source_;
  double t_min_;
  double t_max_;
  bool complete_from_origin_;
};

/// Ordinate of the lowest nontrivial zero.
inline constexpr double kFirstZeroOrdinate = 14.134725141734693;

/// Parses the zero-file format: one decimal ordinate per line, blank lines
/// and lines starting with '#' ignored, ascending order required.
/// Errors carry the 1-based line number.
ZeroTable parse_zeros(std::istream& in, const std::string& origin = "<stream>");

/// parse_zeros on a file; a missing or unreadable path raises ValidationError naming it.
ZeroTable load_zeros(const std::filesystem::path& path);

/// Writes the zero-file format, 12 decimals per ordinate.
void write_zeros(std::ostream& out, const ZeroTable& zeros);

/// Riemann-Siegel theta function (asymptotic series).
double riemann_siegel_theta(double t);

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it) by the Riemann-Siegel main
/// sum plus the remainder terms C_0..C_4. Valid for 10 <= t <= 1e5.
double hardy_Z(double t);

/// Every sign change of hardy_Z in [t_min, t_max], bisected to 1e-9.
/// Requires 10 <= t_min < t_max <= 1e4.
ZeroTable find_zeros(double t_min, double t_max);

/// (gamma_{n+r} - gamma_n) log(gamma_n) / (2 pi r) for every n with n + r in range.
std::vector<double> normalized_gaps(const ZeroTable& zeros, std::int64_t r);

struct GapStatistics {
  std::int64_t r = 0;
  double max_normalized = 0.0;
  double min_normalized = 0.0;
  double mean_normalized = 0.0;
  std::int64_t argmax_index = 0;  // n, 0-based, of the gap gamma_{n+r} - gamma_n
  std::int64_t argmin_index = 0;
  std::int64_t count = 0;
};

/// Finite-range extremes of normalized r-gaps.
GapStatistics gap_extrema(const ZeroTable& zeros, std::int64_t r);

/// N(T) - (T / 2 pi) log(T / 2 pi e) - 7/8 with N counted from the table.
/// The table must be complete from the first zero up to at least T.
double empirical_S(double t, const ZeroTable& zeros);

}  // namespace zgap
