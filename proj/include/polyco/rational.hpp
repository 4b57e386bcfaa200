#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polyco {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace polyco
