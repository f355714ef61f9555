#include "fivecard/shuffle.hpp"

namespace fivecard {

void BiasSpec::validate() const {
  detail::check_epsilon(epsilon);
  if (s_star < 0 || s_star > 4) {
    throw std::domain_error("distinguished cut depth must lie in 0..4, got " +
                            std::to_string(s_star));
  }
}

void CutChain::validate() const {
  detail::check_stay_probability(a);
  if (shuffles < 0) {
    throw std::domain_error("shuffle count must be nonnegative, got " +
                            std::to_string(shuffles));
  }
}

ShiftDist<double> bias_distribution(const BiasSpec& spec) {
  spec.validate();
  return bias_distribution<double>(spec.epsilon, spec.s_star);
}

ShiftDist<double> chain_distribution_closed(const CutChain& chain) {
  chain.validate();
  return chain_distribution_closed<double>(chain.a, chain.shuffles);
}

ShiftDist<double> chain_distribution_power(const CutChain& chain, long cap) {
  chain.validate();
  return chain_distribution_power<double>(chain.a, chain.shuffles, cap);
}

double effective_epsilon(const CutChain& chain) {
  chain.validate();
  return effective_epsilon<double>(chain.a, chain.shuffles);
}

}  // namespace fivecard
