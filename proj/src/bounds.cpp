#include "zgap/bounds.hpp"

namespace zgap {

std::string_view to_string(Direction d) { return d == Direction::Sup ? "sup" : "inf"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::CtbIntegral:
      return "ctb";
    case Method::CtbClosedForm:
      return "ctb-closed-form";
    case Method::Tsang:
      return "tsang";
    case Method::Unconditional:
      return "unconditional";
  }
  return "unknown";
}

}  // namespace zgap
