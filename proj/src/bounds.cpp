#include "fivecard/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "fivecard/numeric.hpp"
#include "fivecard/shuffle.hpp"

namespace fivecard {
namespace {

// Below this the diagonal gap is treated as exactly zero (perfect one-step
// mixing); above 1 minus this it is treated as exactly one (frozen chain).
constexpr double kGapZero = 1e-14;

bool parity_admits(Parity parity, long t) {
  switch (parity) {
    case Parity::Any:
      return true;
    case Parity::Even:
      return t % 2 == 0;
    case Parity::Odd:
      return t % 2 == 1;
  }
  throw std::logic_error("unhandled parity");
}

}  // namespace

Parity parity_from_string(const std::string& text) {
  if (text == "any") return Parity::Any;
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be one of any/even/odd, got \"" + text + "\"");
}

const char* to_string(Parity parity) {
  switch (parity) {
    case Parity::Any:
      return "any";
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
  }
  throw std::logic_error("unhandled parity");
}

void BoundQuery::validate() const {
  detail::check_stay_probability(a);
  if (!(deviation_bound > 0.0) || !(deviation_bound < 0.5)) {
    throw std::domain_error("deviation bound must lie strictly between 0 and 1/2, got " +
                            std::to_string(deviation_bound));
  }
}

double posterior_deviation(double a, long shuffles) {
  detail::check_stay_probability(a);
  if (shuffles < 0) throw std::domain_error("shuffle count must be nonnegative");
  const double x = numeric::pow_int<double>(diagonal_gap(a), shuffles);
  return 20.0 * std::fabs(x) / (16.0 + 24.0 * x);
}

long parity_ceil(double threshold, Parity parity) {
  long t = static_cast<long>(std::ceil(threshold - 1e-9));
  if (t < 0) t = 0;
  while (!parity_admits(parity, t)) ++t;
  return t;
}

BoundResult corollary_bound(const BoundQuery& query) {
  query.validate();
  const double gap = diagonal_gap(query.a);
  BoundResult result;
  if (std::fabs(gap) < kGapZero) {
    result.kind = BoundKind::AnyT;
    return result;
  }
  if (gap >= 1.0 - kGapZero) {
    result.kind = BoundKind::NoFiniteT;
    return result;
  }
  const double c = query.deviation_bound;
  const double log_gap = std::log(std::fabs(gap));
  result.kind = BoundKind::Finite;
  result.analytic_cond1 = std::log(16.0 * c / (20.0 - 24.0 * c)) / log_gap;
  result.analytic_cond2 = std::log(16.0 * c / (20.0 + 24.0 * c)) / log_gap;
  return result;
}

BoundResult minimal_shuffles(const BoundQuery& query) {
  query.validate();
  const double gap = diagonal_gap(query.a);
  BoundResult result;
  if (std::fabs(gap) < kGapZero) {
    result.kind = BoundKind::AnyT;
    result.minimal_T = query.parity == Parity::Odd ? 1 : 0;
    result.achieved_deviation = 0.0;
    return result;
  }
  if (gap >= 1.0 - kGapZero) {
    result.kind = BoundKind::NoFiniteT;
    return result;
  }

  // The analytic thresholds bracket the answer from below, so the scan can
  // start a few candidates earlier instead of walking up from zero.
  const BoundResult analytic = corollary_bound(query);
  long start = static_cast<long>(std::floor(
                  std::min(*analytic.analytic_cond1, *analytic.analytic_cond2))) -
               6;
  if (start < 0) start = 0;
  const long guard = start + 1'000'000;
  for (long t = start; t <= guard; ++t) {
    if (!parity_admits(query.parity, t)) continue;
    if (posterior_deviation(query.a, t) <= query.deviation_bound) {
      result.kind = BoundKind::Finite;
      result.minimal_T = t;
      result.achieved_deviation = posterior_deviation(query.a, t);
      return result;
    }
  }
  throw std::logic_error("shuffle count scan failed to terminate near its analytic bound");
}

BoundResult bound_analysis(const BoundQuery& query) {
  BoundResult merged = minimal_shuffles(query);
  const BoundResult analytic = corollary_bound(query);
  merged.analytic_cond1 = analytic.analytic_cond1;
  merged.analytic_cond2 = analytic.analytic_cond2;
  return merged;
}

}  // namespace fivecard
