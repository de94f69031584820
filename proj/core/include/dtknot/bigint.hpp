#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dtknot {

// Exact arbitrary-precision integers; rationals appear only when polynomials
// are evaluated at points. There is no floating point anywhere in the kernel.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace dtknot
