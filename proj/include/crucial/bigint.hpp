#ifndef CRUCIAL_BIGINT_HPP
#define CRUCIAL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace crucial {

// Counts grow past 64 bits quickly; all enumeration results are exact.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Exact quotient; throws std::logic_error if the division leaves a remainder
// (a remainder indicates a bug in a closed-form evaluation, not bad input).
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace crucial

#endif
