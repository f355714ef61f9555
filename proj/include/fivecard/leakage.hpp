#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fivecard/arrangement.hpp"
#include "fivecard/shuffle.hpp"

namespace fivecard {

/// Classification of a revealed circle from the adversary's point of view.
/// Case1 finals are those a cut of the distinguished depth could have
/// produced from some plausible start; these are the only finals whose
/// posterior departs from one half.  Case2 finals are the remaining
/// reachable ones.  Unreachable marks zero-probability finals.
enum class CaseLabel { Case1, Case2, Unreachable };

const char* to_string(CaseLabel label);
CaseLabel case_label_from_string(const std::string& text);

/// Adversary's belief over starting circles.  Weights must be nonnegative
/// and sum to one; keys with zero weight are ignored.
template <class S>
struct Prior {
  std::map<Arrangement, S> weights;

  void validate() const {
    const S tol = numeric::sum_tolerance<S>();
    S total(0);
    bool positive = false;
    for (const auto& [arr, w] : weights) {
      if (w < S(0) - tol || w > S(1) + tol) {
        throw std::domain_error("prior weight out of [0, 1] for " + arr.str());
      }
      if (w > S(0)) positive = true;
      total = total + w;
    }
    if (!positive) throw std::domain_error("prior must give positive weight somewhere");
    if (numeric::abs_value<S>(total - S(1)) > S(8) * tol) {
      throw std::domain_error("prior weights must sum to 1");
    }
  }

  std::vector<Arrangement> support() const {
    std::vector<Arrangement> out;
    for (const auto& [arr, w] : weights) {
      if (w > S(0)) out.push_back(arr);
    }
    return out;
  }
};

/// The baseline adversary model: the first player's bit is a fair coin and
/// the second player's bit is known to be zero.
template <class S>
Prior<S> default_prior() {
  Prior<S> prior;
  for (const Arrangement& arr : restricted_initial_arrangements()) {
    prior.weights.emplace(arr, numeric::ratio<S>(1, 2));
  }
  return prior;
}

/// What the adversary can conclude from one particular revealed circle.
template <class S>
struct FinalSummary {
  CaseLabel label = CaseLabel::Unreachable;
  /// Probability of observing this circle at all.
  S marginal{};
  /// P(start | this circle), one entry per start in the prior's support;
  /// empty when the circle is unreachable.
  std::map<Arrangement, S> posterior;
};

/// Full posterior map: for every reachable revealed circle, the adversary's
/// updated belief over starts.  s_star records the distinguished cut depth
/// used to split finals into Case1 and Case2.
template <class S>
struct PosteriorTable {
  int s_star = 0;
  std::map<Arrangement, FinalSummary<S>> finals;

  const FinalSummary<S>& summary(const Arrangement& final_arr) const {
    auto it = finals.find(final_arr);
    if (it == finals.end()) {
      throw std::out_of_range("no entry for final arrangement " + final_arr.str());
    }
    return it->second;
  }

  const S& entry(const Arrangement& initial, const Arrangement& final_arr) const {
    const FinalSummary<S>& fin = summary(final_arr);
    auto it = fin.posterior.find(initial);
    if (it == fin.posterior.end()) {
      throw std::out_of_range("no posterior for start " + initial.str() +
                              " at final " + final_arr.str());
    }
    return it->second;
  }
};

/// Largest entrywise gap between two tables over posteriors and final
/// marginals.  The tables must describe the same finals with the same
/// labels and the same starts; otherwise throws std::invalid_argument.
template <class S>
S max_posterior_difference(const PosteriorTable<S>& x, const PosteriorTable<S>& y) {
  if (x.finals.size() != y.finals.size()) {
    throw std::invalid_argument("posterior tables cover different finals");
  }
  S worst(0);
  for (const auto& [final_arr, fx] : x.finals) {
    const FinalSummary<S>& fy = y.summary(final_arr);
    if (fx.label != fy.label || fx.posterior.size() != fy.posterior.size()) {
      throw std::invalid_argument("posterior tables disagree structurally at " +
                                  final_arr.str());
    }
    worst = std::max(worst, numeric::abs_value<S>(fx.marginal - fy.marginal));
    for (const auto& [initial, px] : fx.posterior) {
      worst = std::max(worst, numeric::abs_value<S>(px - y.entry(initial, final_arr)));
    }
  }
  return worst;
}

/// Posterior by direct Bayes over every (start, cut depth) pair: the
/// marginal of a final F is sum_I prior[I] * P(depth taking I to F), and
/// P(I | F) divides I's contribution by that marginal.  Finals with zero
/// marginal come back Unreachable with no posterior entries.  Case1 finals
/// are those of the form I cut at depth s_star_label for a supported I.
template <class S>
PosteriorTable<S> posterior_exact(const Prior<S>& prior, const ShiftDist<S>& dist,
                                  int s_star_label = 0) {
  prior.validate();
  if (s_star_label < 0 || s_star_label > 4) {
    throw std::domain_error("cut depth must lie in 0..4");
  }
  const std::vector<Arrangement> support = prior.support();

  std::vector<Arrangement> case1;
  for (const Arrangement& init : support) case1.push_back(init.rotated(s_star_label));

  std::map<Arrangement, FinalSummary<S>> finals;
  for (const Arrangement& init : support) {
    for (int k = 0; k < Arrangement::kSize; ++k) {
      finals.emplace(init.rotated(k), FinalSummary<S>{});
    }
  }

  for (auto& [final_arr, fin] : finals) {
    std::map<Arrangement, S> contribution;
    S marginal(0);
    for (const Arrangement& init : support) {
      std::optional<int> depth = cut_depth_between(init, final_arr);
      S c = depth ? prior.weights.at(init) * dist.at(*depth) : S(0);
      contribution.emplace(init, c);
      marginal = marginal + c;
    }
    if (marginal == S(0)) {
      fin = FinalSummary<S>{CaseLabel::Unreachable, S(0), {}};
      continue;
    }
    fin.label = contains(case1, final_arr) ? CaseLabel::Case1 : CaseLabel::Case2;
    fin.marginal = marginal;
    for (auto& [init, c] : contribution) fin.posterior.emplace(init, c / marginal);
  }

  PosteriorTable<S> table;
  table.s_star = s_star_label;
  table.finals = std::move(finals);
  return table;
}

/// Probability of seeing a Case1 final when the start is the one matching
/// it under the distinguished depth: (1/2)(2/5 - (3/4) epsilon).
template <class S>
S final_marginal_case1(const S& epsilon) {
  detail::check_epsilon(epsilon);
  return numeric::ratio<S>(1, 2) *
         (numeric::ratio<S>(2, 5) - numeric::ratio<S>(3, 4) * epsilon);
}

/// Probability of any one particular Case2 final: 1/5 + epsilon/4.
/// Vanishes at epsilon = -4/5, where Case2 finals become unreachable.
template <class S>
S final_marginal_case2(const S& epsilon) {
  detail::check_epsilon(epsilon);
  return numeric::ratio<S>(1, 5) + epsilon / S(4);
}

/// Closed-form posterior under the baseline prior and one biased cut with
/// distinguished depth s_star.  A Case1 final F gives the matching start
/// posterior (4 - 20e)/(8 - 15e) and the other start (4 + 5e)/(8 - 15e);
/// every Case2 final splits the two starts exactly in half.
template <class S>
PosteriorTable<S> posterior_closed_single(const S& epsilon, int s_star) {
  detail::check_epsilon(epsilon);
  if (s_star < 0 || s_star > 4) throw std::domain_error("cut depth must lie in 0..4");

  const S den = S(8) - S(15) * epsilon;
  const S p_match = (S(4) - S(20) * epsilon) / den;
  const S p_other = (S(4) + S(5) * epsilon) / den;
  const S m1 = final_marginal_case1(epsilon);
  const S m2 = final_marginal_case2(epsilon);
  const std::vector<Arrangement>& starts = restricted_initial_arrangements();

  PosteriorTable<S> table;
  table.s_star = s_star;
  for (const Arrangement& final_arr : restricted_final_arrangements()) {
    FinalSummary<S> fin;
    const Arrangement* matching = nullptr;
    for (const Arrangement& init : starts) {
      if (init.rotated(s_star) == final_arr) matching = &init;
    }
    if (matching != nullptr) {
      fin.label = CaseLabel::Case1;
      fin.marginal = m1;
      for (const Arrangement& init : starts) {
        fin.posterior.emplace(init, &init == matching ? p_match : p_other);
      }
    } else if (m2 == S(0)) {
      fin = FinalSummary<S>{CaseLabel::Unreachable, S(0), {}};
    } else {
      fin.label = CaseLabel::Case2;
      fin.marginal = m2;
      for (const Arrangement& init : starts) {
        fin.posterior.emplace(init, numeric::ratio<S>(1, 2));
      }
    }
    table.finals.emplace(final_arr, std::move(fin));
  }
  return table;
}

/// Closed-form posterior after T chained cuts, obtained by collapsing the
/// chain to its equivalent single biased cut at depth zero.  A Case1 final
/// gives (4 + 16x)/(8 + 12x) for the matching start and (4 - 4x)/(8 + 12x)
/// for the other, where x = (a - b)^T.
template <class S>
PosteriorTable<S> posterior_closed_repeated(const S& a, long shuffles) {
  return posterior_closed_single(effective_epsilon<S>(a, shuffles), 0);
}

inline PosteriorTable<double> posterior_closed_repeated(const CutChain& chain) {
  chain.validate();
  return posterior_closed_repeated<double>(chain.a, chain.shuffles);
}

/// Chance that cutting start i at a random depth reproduces start j as-is,
/// summed over depths.  Both arguments must be restricted starts.
template <class S>
S shift_match_probability(const Arrangement& i, const Arrangement& j,
                          const ShiftDist<S>& dist) {
  if (!contains(restricted_initial_arrangements(), i) ||
      !contains(restricted_initial_arrangements(), j)) {
    throw std::domain_error("shift match probability is defined on restricted starts only");
  }
  S acc(0);
  for (int k = 0; k < Arrangement::kSize; ++k) {
    if (i.rotated(k) == j) acc = acc + dist.at(k);
  }
  return acc;
}

/// Posterior table plus two scalar summaries of the leak: the success rate
/// of the maximum-posterior guesser and the largest distance of any
/// posterior entry from one half.
template <class S>
struct LeakageReport {
  PosteriorTable<S> table;
  S map_guess_success{};
  S max_deviation{};
};

template <class S>
LeakageReport<S> adversary_report(const Prior<S>& prior, const ShiftDist<S>& dist,
                                  int s_star_label = 0) {
  LeakageReport<S> report;
  report.table = posterior_exact(prior, dist, s_star_label);
  report.map_guess_success = S(0);
  report.max_deviation = S(0);
  for (const auto& [final_arr, fin] : report.table.finals) {
    if (fin.label == CaseLabel::Unreachable) continue;
    S best(0);
    for (const auto& [init, p] : fin.posterior) {
      best = std::max(best, p);
      report.max_deviation = std::max(
          report.max_deviation, numeric::abs_value<S>(p - numeric::ratio<S>(1, 2)));
    }
    report.map_guess_success = report.map_guess_success + fin.marginal * best;
  }
  return report;
}

/// Worst-case posterior envelope when only a lower bound on a positive bias
/// is known: the matching start's posterior can be at most match_posterior_max
/// and the other start's at least other_posterior_min.
struct Level2Bounds {
  double match_posterior_max = 0.0;
  double other_posterior_min = 0.0;
};

/// Requires 0 < eps_lower <= 1/5; throws std::domain_error otherwise.
Level2Bounds level2_bounds(double eps_lower);

}  // namespace fivecard
