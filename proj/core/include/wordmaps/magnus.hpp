#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// An element of Z<X_1..X_d> modulo words longer than `degree_bound`.
///
/// Coefficients of degree n live in a dense block of d^n entries; the word
/// a_1 a_2 ... a_n (letters from 0) sits at index ((a_1 d + a_2) d + ...) + a_n.
/// Under x_i -> 1 + X_i the free group maps into the units of this ring with
/// kernel exactly the (degree_bound + 1)-th lower central term, so products of
/// such images compute in the free nilpotent group of class degree_bound.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t arity, std::uint32_t degree_bound);

  static TruncatedSeries one(std::size_t arity, std::uint32_t degree_bound);
  /// 1 + X_var, var from 1.
  static TruncatedSeries generator(std::size_t arity, std::uint32_t degree_bound, std::uint32_t var);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t degree_bound() const noexcept { return degree_bound_; }

  std::span<const BigInt> homogeneous(std::uint32_t n) const;
  std::span<BigInt> homogeneous(std::uint32_t n);
  const BigInt& constant() const { return coeffs_[0]; }

  /// Lowest degree >= 1 carrying a nonzero coefficient, or degree_bound + 1.
  std::uint32_t lowest_nonconstant_degree() const;

  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  /// Inverse of a series with constant term 1.
  TruncatedSeries inverse() const;
  /// s^k for any integer k, s with constant term 1, via the binomial series.
  TruncatedSeries power(const BigInt& k) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_unit_constant() const;

  std::size_t arity_;
  std::uint32_t degree_bound_;
  std::vector<std::size_t> offsets_;  // offsets_[n] = start of degree n, size bound + 2
  std::vector<BigInt> coeffs_;
};

TruncatedSeries magnus_image(const Word& w, std::size_t arity, std::uint32_t degree_bound);
TruncatedSeries magnus_image(const FormalCommutator& alpha, std::size_t arity, std::uint32_t degree_bound);

}  // namespace wordmaps
