#pragma once

#include <type_traits>

namespace fivecard::numeric {

/// Exact fraction num/den in the scalar type S.  For floating point this is
/// one correctly rounded division; for rational types it is exact.
template <class S>
S ratio(long num, long den) {
  return S(num) / S(den);
}

template <class S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

/// base^e for integer e >= 0 by repeated squaring, with 0^0 == 1.
template <class S>
S pow_int(S base, long e) {
  S acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Slack allowed when validating that probabilities sum to one: zero for
/// exact types, 1e-12 for floating point.
template <class S>
S sum_tolerance() {
  if constexpr (std::is_floating_point_v<S>) {
    return S(1e-12);
  } else {
    return S(0);
  }
}

template <class S>
double as_double(const S& x) {
  if constexpr (std::is_floating_point_v<S>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

}  // namespace fivecard::numeric
