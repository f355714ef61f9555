#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fivecard {

/// Arbitrary-precision rational scalar.  Every templated quantity in the
/// library can be instantiated with Rational instead of double, in which
/// case all arithmetic is exact and validation tolerances collapse to zero.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace fivecard
