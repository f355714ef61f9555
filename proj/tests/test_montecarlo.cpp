#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "fivecard/montecarlo.hpp"

using namespace fivecard;

namespace {

SimConfig bias_config(double epsilon, int s_star, long n, std::uint64_t seed) {
  SimConfig config;
  config.shuffle = BiasSpec{epsilon, s_star};
  config.n_samples = n;
  config.seed = seed;
  return config;
}

long total_count(const SimResult& result) {
  long total = 0;
  for (const auto& [init, row] : result.joint_counts) {
    for (const auto& [fin, count] : row) total += count;
  }
  return total;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("identical configs give bit-identical results") {
  const SimConfig config = bias_config(0.1, 0, 30'000, 123);
  const SimResult first = simulate(config);
  const SimResult second = simulate(config);
  CHECK(first.joint_counts == second.joint_counts);
  CHECK(first.shift_counts == second.shift_counts);
  CHECK(first.empirical_and_rate == second.empirical_and_rate);
  CHECK(max_posterior_difference(first.empirical_posterior, second.empirical_posterior) == 0.0);
}

TEST_CASE("different seeds give different counts") {
  const SimResult first = simulate(bias_config(0.1, 0, 30'000, 123));
  const SimResult second = simulate(bias_config(0.1, 0, 30'000, 124));
  CHECK(first.joint_counts != second.joint_counts);
}

TEST_CASE("counts always add up to the sample size") {
  for (long n : {1L, 7L, 65'536L, 65'537L, 200'000L}) {
    const SimResult result = simulate(bias_config(0.05, 2, n, 9));
    CHECK(result.n_samples == n);
    CHECK(total_count(result) == n);
    long shift_total = 0;
    for (long c : result.shift_counts) shift_total += c;
    CHECK(shift_total == n);
  }
}

TEST_CASE("empirical posterior rows sum to one over observed finals") {
  const SimResult result = simulate(bias_config(0.1, 0, 50'000, 11));
  int reachable = 0;
  for (const auto& [fin, summary] : result.empirical_posterior.finals) {
    if (summary.label == CaseLabel::Unreachable) continue;
    ++reachable;
    double row = 0.0;
    for (const auto& [init, p] : summary.posterior) row += p;
    CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(reachable == 5);
}

TEST_CASE("identity chain from a point-mass prior lands every sample on the start") {
  SimConfig config;
  Prior<double> prior;
  prior.weights.emplace(Arrangement::parse("rBBrB"), 1.0);
  config.prior = prior;
  config.shuffle = CutChain{1.0, 5};
  config.n_samples = 100;
  config.seed = 1;
  const SimResult result = simulate(config);
  CHECK(result.joint_counts.at(Arrangement::parse("rBBrB"))
            .at(Arrangement::parse("rBBrB")) == 100);
  CHECK(result.shift_counts[0] == 100);
  CHECK(result.empirical_and_rate == 0.0);
}

TEST_CASE("default prior never produces an AND of one") {
  const SimResult result = simulate(bias_config(0.15, 3, 40'000, 5));
  CHECK(result.empirical_and_rate == 0.0);
}

TEST_CASE("full prior produces an AND rate near one quarter") {
  SimConfig config;
  Prior<double> prior;
  for (const Arrangement& init : initial_arrangements()) prior.weights.emplace(init, 0.25);
  config.prior = prior;
  config.shuffle = BiasSpec{0.0, 0};
  config.n_samples = 100'000;
  config.seed = 21;
  const SimResult result = simulate(config);
  CHECK(std::fabs(result.empirical_and_rate - 0.25) < 5.0 * result.std_error_bound);
}

TEST_CASE("unbiased million-sample run stays within three sigma of one half") {
  const SimResult result = simulate(bias_config(0.0, 0, 1'000'000, 42));
  CHECK(result.std_error_bound == doctest::Approx(0.0005).epsilon(1e-12));
  for (const auto& [fin, summary] : result.empirical_posterior.finals) {
    REQUIRE(summary.label != CaseLabel::Unreachable);
    for (const auto& [init, p] : summary.posterior) {
      CHECK(std::fabs(p - 0.5) < 3.0 * result.std_error_bound);
    }
  }
}

TEST_CASE("biased million-sample run stays within three sigma of the match posterior") {
  const SimResult result = simulate(bias_config(0.1, 0, 1'000'000, 7));
  for (const Arrangement& init : restricted_initial_arrangements()) {
    const double p = result.empirical_posterior.entry(init, init);
    CHECK(std::fabs(p - 4.0 / 13.0) < 3.0 * result.std_error_bound);
  }
}

TEST_CASE("chain sampling reproduces the chain law within five sigma") {
  struct Example {
    CutChain chain;
    long n;
    std::uint64_t seed;
  };
  for (const Example& ex : {Example{CutChain{0.3, 4}, 200'000, 3},
                            Example{CutChain{0.0, 3}, 100'000, 1}}) {
    SimConfig config;
    config.shuffle = ex.chain;
    config.n_samples = ex.n;
    config.seed = ex.seed;
    const SimResult result = simulate(config);
    const ShiftDist<double> law = chain_distribution_power(ex.chain);
    for (int k = 0; k < 5; ++k) {
      const double empirical =
          static_cast<double>(result.shift_counts[static_cast<std::size_t>(k)]) /
          static_cast<double>(result.n_samples);
      CHECK(std::fabs(empirical - law.at(k)) < 5.0 * result.std_error_bound);
    }
  }
}

TEST_CASE("sampling metadata is recorded") {
  const SimResult result = simulate(bias_config(0.1, 1, 1'000, 99));
  CHECK(result.seed == 99);
  CHECK(result.rng_algorithm == std::string(kRngAlgorithm));
  CHECK(result.empirical_posterior.s_star == 1);
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(simulate(bias_config(0.1, 0, 0, 1)), std::domain_error);
  CHECK_THROWS_AS(simulate(bias_config(0.1, 0, -5, 1)), std::domain_error);
  CHECK_THROWS_AS(simulate(bias_config(0.5, 0, 100, 1)), std::domain_error);
  SimConfig config;
  config.shuffle = CutChain{0.5, -2};
  config.n_samples = 100;
  CHECK_THROWS_AS(simulate(config), std::domain_error);
}

}  // TEST_SUITE
