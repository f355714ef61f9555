#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "fivecard/leakage.hpp"
#include "fivecard/rng.hpp"
#include "fivecard/shuffle.hpp"

namespace fivecard {

/// One sampling run: draw a start from the prior, apply either a single
/// biased cut or a step-by-step chain of cuts, reveal the result.
struct SimConfig {
  Prior<double> prior = default_prior<double>();
  std::variant<BiasSpec, CutChain> shuffle = BiasSpec{};
  long n_samples = 100'000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SimResult {
  long n_samples = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  /// start -> revealed circle -> occurrences, zero entries included.
  std::map<Arrangement, std::map<Arrangement, long>> joint_counts;
  /// Occurrences of each net cut depth.
  std::array<long, 5> shift_counts{};
  /// Posterior table tabulated from the counts; circles never observed come
  /// back Unreachable.
  PosteriorTable<double> empirical_posterior;
  /// Fraction of samples whose revealed circle decodes to output one.
  double empirical_and_rate = 0.0;
  /// 1 / (2 sqrt(n)), the worst-case standard error of any estimated rate.
  double std_error_bound = 0.0;
};

/// Deterministic for a fixed config: samples are drawn in fixed chunks of
/// 65536, each chunk re-seeded from (seed, chunk index), so the outcome is
/// independent of any batching or scheduling of the chunks.
SimResult simulate(const SimConfig& config);

}  // namespace fivecard
