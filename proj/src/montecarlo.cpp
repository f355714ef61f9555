#include "fivecard/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fivecard {
namespace {

constexpr long kChunkSamples = 65536;

std::uint64_t chunk_seed(std::uint64_t seed, long chunk) {
  std::uint64_t state =
      seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(chunk + 1));
  return splitmix64(state);
}

int pick(double u, const std::vector<double>& cumulative) {
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i) {
    if (u < cumulative[i]) return static_cast<int>(i);
  }
  return static_cast<int>(cumulative.size()) - 1;
}

}  // namespace

void SimConfig::validate() const {
  prior.validate();
  std::visit([](const auto& spec) { spec.validate(); }, shuffle);
  if (n_samples < 1) {
    throw std::domain_error("sample count must be positive, got " +
                            std::to_string(n_samples));
  }
}

SimResult simulate(const SimConfig& config) {
  config.validate();

  const std::vector<Arrangement> support = config.prior.support();
  std::vector<double> prior_cumulative;
  double acc = 0.0;
  for (const Arrangement& init : support) {
    acc += config.prior.weights.at(init);
    prior_cumulative.push_back(acc);
  }

  const BiasSpec* bias = std::get_if<BiasSpec>(&config.shuffle);
  const CutChain* chain = std::get_if<CutChain>(&config.shuffle);
  std::vector<double> cut_cumulative;
  if (bias != nullptr) {
    const ShiftDist<double> law = bias_distribution(*bias);
    double total = 0.0;
    for (int k = 0; k < 5; ++k) {
      total += law.at(k);
      cut_cumulative.push_back(total);
    }
  }

  SimResult result;
  result.n_samples = config.n_samples;
  result.seed = config.seed;
  result.rng_algorithm = kRngAlgorithm;
  result.std_error_bound = 0.5 / std::sqrt(static_cast<double>(config.n_samples));

  std::map<Arrangement, std::map<Arrangement, long>> counts;
  std::vector<Arrangement> universe;
  for (const Arrangement& init : support) {
    for (int k = 0; k < Arrangement::kSize; ++k) {
      const Arrangement fin = init.rotated(k);
      if (!contains(universe, fin)) universe.push_back(fin);
    }
  }
  for (const Arrangement& init : support) {
    for (const Arrangement& fin : universe) counts[init][fin] = 0;
  }

  long and_hits = 0;
  for (long done = 0; done < config.n_samples; done += kChunkSamples) {
    const long batch = std::min(kChunkSamples, config.n_samples - done);
    Xoshiro256StarStar rng(chunk_seed(config.seed, done / kChunkSamples));
    for (long s = 0; s < batch; ++s) {
      const Arrangement& start = support[static_cast<std::size_t>(
          pick(rng.next_unit(), prior_cumulative))];
      int depth = 0;
      if (bias != nullptr) {
        depth = pick(rng.next_unit(), cut_cumulative);
      } else {
        for (long t = 0; t < chain->shuffles; ++t) {
          if (rng.next_unit() < chain->a) continue;
          int step = static_cast<int>(rng.next_unit() * 4.0);
          if (step > 3) step = 3;
          depth = step >= depth ? step + 1 : step;
        }
      }
      const Arrangement revealed = start.rotated(depth);
      ++counts[start][revealed];
      ++result.shift_counts[static_cast<std::size_t>(depth)];
      if (evaluate_and(revealed)) ++and_hits;
    }
  }

  result.joint_counts = counts;
  result.empirical_and_rate =
      static_cast<double>(and_hits) / static_cast<double>(config.n_samples);

  const int s_star_label = bias != nullptr ? bias->s_star : 0;
  std::vector<Arrangement> case1;
  for (const Arrangement& init : support) case1.push_back(init.rotated(s_star_label));

  PosteriorTable<double> table;
  table.s_star = s_star_label;
  for (const Arrangement& fin : universe) {
    long total = 0;
    for (const Arrangement& init : support) total += counts[init][fin];
    FinalSummary<double> summary;
    if (total == 0) {
      summary = FinalSummary<double>{CaseLabel::Unreachable, 0.0, {}};
    } else {
      summary.label = contains(case1, fin) ? CaseLabel::Case1 : CaseLabel::Case2;
      summary.marginal =
          static_cast<double>(total) / static_cast<double>(config.n_samples);
      for (const Arrangement& init : support) {
        summary.posterior.emplace(init, static_cast<double>(counts[init][fin]) /
                                            static_cast<double>(total));
      }
    }
    table.finals.emplace(fin, std::move(summary));
  }
  result.empirical_posterior = std::move(table);
  return result;
}

}  // namespace fivecard
