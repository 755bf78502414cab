#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace zgap {

/// Sup bounds the largest normalized r-gaps from below (frequency r + theta sqrt(r)),
/// Inf bounds the smallest from above (frequency r - theta sqrt(r)).
enum class Direction { Sup, Inf };

enum class Method { CtbIntegral, CtbClosedForm, Tsang, Unconditional };

struct BoundQuery {
  std::int64_t r = 1;
  Direction direction = Direction::Sup;
  Method method = Method::CtbIntegral;
};

struct BoundResult {
  double theta = 0.0;
  std::optional<double> ell;
  double margin = 0.0;  // rhs(theta, ell) - theta
  Method method = Method::CtbIntegral;
};

/// +1 for Sup, -1 for Inf.
constexpr double direction_sign(Direction d) { return d == Direction::Sup ? 1.0 : -1.0; }

std::string_view to_string(Direction d);
std::string_view to_string(Method m);

}  // namespace zgap
