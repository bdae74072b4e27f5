#include "wordmaps/bigint.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "wordmaps/error.hpp"

namespace wordmaps {

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt binomial(const BigInt& k, std::uint64_t m) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    num *= k - i;
    den *= i + 1;
  }
  return num / den;
}

BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::size_t bit_length(const BigInt& x) {
  if (x <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

double log2(const BigInt& x) {
  if (x <= 0) throw Error(Errc::InvalidArgument, "log2 of non-positive integer");
  const std::size_t bits = bit_length(x);
  if (bits <= 62) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  // keep the top 62 bits as mantissa
  const std::size_t shift = bits - 62;
  const BigInt top = x >> shift;
  return static_cast<double>(shift) + std::log2(static_cast<double>(top.convert_to<std::uint64_t>()));
}

std::string fixed_decimal(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

std::string log2_decimal(const BigInt& x, int places) { return fixed_decimal(log2(x), places); }

std::string to_string(const BigInt& x) { return x.str(); }

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::ExponentOverflow, "integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace wordmaps
