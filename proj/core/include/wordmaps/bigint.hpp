#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordmaps {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt binomial(std::uint64_t n, std::uint64_t k);
/// Generalized binomial coefficient k(k-1)...(k-m+1)/m! for any integer k.
BigInt binomial(const BigInt& k, std::uint64_t m);
BigInt catalan(std::uint64_t n);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Number of bits needed to write x (> 0); 0 for x = 0.
std::size_t bit_length(const BigInt& x);

/// log2(x) for x >= 1, rendered with a fixed number of decimals.
double log2(const BigInt& x);
std::string log2_decimal(const BigInt& x, int places = 6);
std::string fixed_decimal(double value, int places = 6);

std::string to_string(const BigInt& x);

/// Narrowing conversion; throws Error(ExponentOverflow) when x does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace wordmaps
