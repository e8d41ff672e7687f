#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace gms {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);
BigInt pow2(std::size_t e);

/// Fixed-point decimal rendering of a non-negative rational using exact
/// integer division; the last digit is truncated, never rounded.
std::string to_decimal(const Rational& value, std::size_t digits);

double to_double(const Rational& value);

}  // namespace gms
