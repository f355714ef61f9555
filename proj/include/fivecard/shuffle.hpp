#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "fivecard/numeric.hpp"

namespace fivecard {

/// Admissible bias range for a single cut.  At the left endpoint the
/// preferred depth is drawn with probability 2/5 and depth zero never occurs;
/// at the right endpoint the preferred depth never occurs.
inline constexpr double kEpsilonMin = -0.8;
inline constexpr double kEpsilonMax = 0.2;

/// Iteration guard for the brute-force chain evaluator.
inline constexpr long kDefaultPowerCap = 1'000'000;

/// One biased cut: the distinguished depth s_star is drawn with probability
/// 1/5 - epsilon and each of the other four depths with 1/5 + epsilon/4.
struct BiasSpec {
  double epsilon = 0.0;
  int s_star = 0;

  /// Throws std::domain_error if epsilon or s_star is out of range.
  void validate() const;
};

/// T repeated cuts where each cut keeps the current net depth with
/// probability a and moves to each of the other four depths with
/// probability (1 - a)/4.
struct CutChain {
  double a = 0.2;
  long shuffles = 0;

  /// Throws std::domain_error if a is outside [0, 1] or shuffles < 0.
  void validate() const;
};

/// Probability law of a net cut depth, indexed by depth 0..4.
/// Construction validates nonnegativity and unit total mass, allowing
/// `slack` of rounding error (defaults to the scalar's tolerance).
template <class S>
class ShiftDist {
 public:
  explicit ShiftDist(const std::array<S, 5>& p, S slack = numeric::sum_tolerance<S>())
      : p_(p) {
    S total(0);
    for (const S& x : p_) {
      if (x < S(0) - slack || x > S(1) + slack) {
        throw std::domain_error("shift probability out of [0, 1]");
      }
      total = total + x;
    }
    if (numeric::abs_value<S>(total - S(1)) > S(5) * slack + slack) {
      throw std::domain_error("shift probabilities must sum to 1");
    }
  }

  static ShiftDist uniform() {
    std::array<S, 5> p;
    p.fill(numeric::ratio<S>(1, 5));
    return ShiftDist(p);
  }

  /// Point mass on a single depth.
  static ShiftDist delta(int k) {
    if (k < 0 || k > 4) throw std::domain_error("cut depth must lie in 0..4");
    std::array<S, 5> p;
    p.fill(S(0));
    p[static_cast<std::size_t>(k)] = S(1);
    return ShiftDist(p);
  }

  const S& at(int k) const {
    if (k < 0 || k > 4) throw std::domain_error("cut depth must lie in 0..4");
    return p_[static_cast<std::size_t>(k)];
  }
  const std::array<S, 5>& probabilities() const { return p_; }

  bool operator==(const ShiftDist&) const = default;

 private:
  std::array<S, 5> p_;
};

namespace detail {

template <class S>
void check_epsilon(const S& epsilon) {
  if (epsilon < numeric::ratio<S>(-4, 5) || epsilon > numeric::ratio<S>(1, 5)) {
    throw std::domain_error("cut bias must lie in [-4/5, 1/5], got " +
                            std::to_string(numeric::as_double(epsilon)));
  }
}

template <class S>
void check_stay_probability(const S& a) {
  if (a < S(0) || a > S(1)) {
    throw std::domain_error("stay probability must lie in [0, 1], got " +
                            std::to_string(numeric::as_double(a)));
  }
}

}  // namespace detail

/// Law of one biased cut with distinguished depth s_star.
template <class S>
ShiftDist<S> bias_distribution(const S& epsilon, int s_star) {
  detail::check_epsilon(epsilon);
  if (s_star < 0 || s_star > 4) throw std::domain_error("cut depth must lie in 0..4");
  std::array<S, 5> p;
  const S quarter = epsilon / S(4);
  for (int k = 0; k < 5; ++k) {
    p[static_cast<std::size_t>(k)] =
        (k == s_star) ? numeric::ratio<S>(1, 5) - epsilon
                      : numeric::ratio<S>(1, 5) + quarter;
  }
  return ShiftDist<S>(p);
}

/// One-step transition matrix on net depths: a on the diagonal and
/// (1 - a)/4 everywhere else.  Entry [i][j] is P(next = j | current = i).
template <class S>
std::array<std::array<S, 5>, 5> transition_matrix(const S& a) {
  detail::check_stay_probability(a);
  const S b = (S(1) - a) / S(4);
  std::array<std::array<S, 5>, 5> m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? a : b;
  return m;
}

/// Spectral gap term a - b with b = (1 - a)/4; ranges over [-1/4, 1] and
/// controls the convergence rate of the chain.
template <class S>
S diagonal_gap(const S& a) {
  return a - (S(1) - a) / S(4);
}

/// Net-depth law after T cuts, starting from depth zero, in closed form:
/// depth 0 gets 1/5 + (4/5)(a-b)^T and every other depth 1/5 - (1/5)(a-b)^T.
/// T = 0 yields the exact point mass on zero.
template <class S>
ShiftDist<S> chain_distribution_closed(const S& a, long shuffles) {
  detail::check_stay_probability(a);
  if (shuffles < 0) throw std::domain_error("shuffle count must be nonnegative");
  const S decay = numeric::pow_int<S>(diagonal_gap(a), shuffles);
  std::array<S, 5> p;
  p[0] = numeric::ratio<S>(1, 5) + numeric::ratio<S>(4, 5) * decay;
  for (int k = 1; k < 5; ++k) {
    p[static_cast<std::size_t>(k)] = numeric::ratio<S>(1, 5) - numeric::ratio<S>(1, 5) * decay;
  }
  return ShiftDist<S>(p);
}

/// Same law as chain_distribution_closed but evaluated the slow way, by T
/// explicit multiplications with the one-step matrix.  Kept deliberately
/// independent of the closed form so the two can cross-check each other.
/// Throws std::domain_error when T exceeds `cap`.  The validation slack of
/// the result grows with T to absorb accumulated rounding.
template <class S>
ShiftDist<S> chain_distribution_power(const S& a, long shuffles, long cap = kDefaultPowerCap) {
  detail::check_stay_probability(a);
  if (shuffles < 0) throw std::domain_error("shuffle count must be nonnegative");
  if (shuffles > cap) {
    throw std::domain_error("shuffle count " + std::to_string(shuffles) +
                            " exceeds the iteration cap " + std::to_string(cap));
  }
  const auto m = transition_matrix(a);
  std::array<S, 5> v;
  v.fill(S(0));
  v[0] = S(1);
  for (long t = 0; t < shuffles; ++t) {
    std::array<S, 5> next;
    for (int j = 0; j < 5; ++j) {
      S acc(0);
      for (int i = 0; i < 5; ++i) {
        acc = acc + v[static_cast<std::size_t>(i)] *
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      next[static_cast<std::size_t>(j)] = acc;
    }
    v = next;
  }
  S slack = numeric::sum_tolerance<S>();
  if constexpr (std::is_floating_point_v<S>) {
    slack = slack * (S(1) + S(static_cast<double>(shuffles)) * S(1e-3));
  }
  return ShiftDist<S>(v, slack);
}

/// Law of two independent cuts applied in sequence: the cyclic convolution
/// of the two depth laws.
template <class S>
ShiftDist<S> compose(const ShiftDist<S>& first, const ShiftDist<S>& second) {
  std::array<S, 5> p;
  for (int k = 0; k < 5; ++k) {
    S acc(0);
    for (int i = 0; i < 5; ++i) {
      acc = acc + first.at(i) * second.at((k - i + 5) % 5);
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return ShiftDist<S>(p, numeric::sum_tolerance<S>() * S(4));
}

/// The single biased cut equivalent to T chained cuts: its bias is
/// -(4/5)(a-b)^T with distinguished depth zero.
template <class S>
S effective_epsilon(const S& a, long shuffles) {
  detail::check_stay_probability(a);
  if (shuffles < 0) throw std::domain_error("shuffle count must be nonnegative");
  return numeric::ratio<S>(-4, 5) * numeric::pow_int<S>(diagonal_gap(a), shuffles);
}

ShiftDist<double> bias_distribution(const BiasSpec& spec);
ShiftDist<double> chain_distribution_closed(const CutChain& chain);
ShiftDist<double> chain_distribution_power(const CutChain& chain, long cap = kDefaultPowerCap);
double effective_epsilon(const CutChain& chain);

}  // namespace fivecard
