#ifndef WALKALG_RATIONAL_HPP
#define WALKALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace walkalg {

// Exact rational scalar used for all linear-combination coefficients.
// No floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace walkalg

#endif  // WALKALG_RATIONAL_HPP
