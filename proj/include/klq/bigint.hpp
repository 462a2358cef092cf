#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace klq {

// All polynomial coefficients and linear-algebra entries are exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace klq
