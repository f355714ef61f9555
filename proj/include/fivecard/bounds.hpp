#pragma once

#include <optional>
#include <string>

namespace fivecard {

/// Parity constraint on the number of shuffles the operator may choose.
enum class Parity { Any, Even, Odd };

Parity parity_from_string(const std::string& text);
const char* to_string(Parity parity);

/// How many chained cuts with stay probability `a` are needed so that every
/// posterior stays within `deviation_bound` of one half.
struct BoundQuery {
  double a = 0.0;
  double deviation_bound = 0.01;
  Parity parity = Parity::Any;

  /// Throws std::domain_error unless a is in [0, 1] and the bound in (0, 1/2).
  void validate() const;
};

/// Finite: a genuine threshold exists.  AnyT: the chain mixes perfectly in
/// one step (a equals the off-diagonal rate), so no count needs enforcing.
/// NoFiniteT: the chain never moves (a = 1), so no count ever suffices.
enum class BoundKind { Finite, AnyT, NoFiniteT };

struct BoundResult {
  BoundKind kind = BoundKind::Finite;
  /// Sufficient real-valued threshold when T is even or the diagonal
  /// dominates (a > b).
  std::optional<double> analytic_cond1;
  /// Sufficient real-valued threshold when T is odd and a < b.
  std::optional<double> analytic_cond2;
  /// Least admissible integer count of shuffles.
  std::optional<long> minimal_T;
  /// Worst posterior distance from one half at minimal_T.
  std::optional<double> achieved_deviation;
};

/// Exact worst-case posterior distance from one half after T chained cuts:
/// 20|a-b|^T / (16 + 24 (a-b)^T).
double posterior_deviation(double a, long shuffles);

/// Smallest nonnegative integer of the requested parity that is >= the
/// threshold.  Thresholds within 1e-9 of an integer snap to it first.
long parity_ceil(double threshold, Parity parity);

/// Analytic sufficient thresholds from the closed-form deviation.
BoundResult corollary_bound(const BoundQuery& query);

/// Least integer count found by scanning candidate counts and evaluating
/// the exact deviation, honoring the parity constraint.
BoundResult minimal_shuffles(const BoundQuery& query);

/// corollary_bound and minimal_shuffles merged into one result.
BoundResult bound_analysis(const BoundQuery& query);

}  // namespace fivecard
