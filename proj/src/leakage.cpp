#include "fivecard/leakage.hpp"

#include <stdexcept>
#include <string>

namespace fivecard {

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1:
      return "Case1";
    case CaseLabel::Case2:
      return "Case2";
    case CaseLabel::Unreachable:
      return "Unreachable";
  }
  throw std::logic_error("unhandled case label");
}

CaseLabel case_label_from_string(const std::string& text) {
  if (text == "Case1") return CaseLabel::Case1;
  if (text == "Case2") return CaseLabel::Case2;
  if (text == "Unreachable") return CaseLabel::Unreachable;
  throw std::invalid_argument("unknown case label \"" + text + "\"");
}

Level2Bounds level2_bounds(double eps_lower) {
  if (!(eps_lower > 0.0) || eps_lower > kEpsilonMax) {
    throw std::domain_error("bias lower bound must lie in (0, 1/5], got " +
                            std::to_string(eps_lower));
  }
  const double den = 8.0 - 15.0 * eps_lower;
  return Level2Bounds{(4.0 - 20.0 * eps_lower) / den, (4.0 + 5.0 * eps_lower) / den};
}

}  // namespace fivecard
