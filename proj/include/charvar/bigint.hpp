#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace charvar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Binomial coefficient with the convention C(n, k) = 0 for k > n or k < 0. */
Int binomial(long n, long k);

/* n! as an exact integer. */
Int factorial(long n);

} // namespace charvar
