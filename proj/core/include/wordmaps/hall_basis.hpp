#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/formal_commutator.hpp"

namespace wordmaps {

/// Basic commutators of weight <= c on d letters, in basis order.
///
/// Weight-1 entries are the letters 1..d. A bracket [a, b] of weight n is basic
/// iff a and b are basic, b precedes a, and when a = [a1, a2] also a2 <= b.
/// Entries are ordered by weight; within a weight, by the position of a, then
/// of b. Earlier entries compare "smaller".
class HallBasis {
 public:
  HallBasis() = default;

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t max_weight() const noexcept { return max_weight_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const FormalCommutator& operator[](std::size_t j) const { return entries_.at(j); }
  const std::vector<FormalCommutator>& entries() const noexcept { return entries_; }
  std::uint32_t weight(std::size_t j) const { return entries_.at(j).weight(); }
  /// Basis positions of the two halves of a bracket entry.
  std::optional<std::pair<std::size_t, std::size_t>> halves(std::size_t j) const;

  /// Half-open index range [first, last) of the entries of weight w.
  std::pair<std::size_t, std::size_t> weight_range(std::uint32_t w) const;
  std::size_t count_of_weight(std::uint32_t w) const;

  /// One line per entry: "<index> <weight> <tree>", indices from 1.
  std::string dump() const;

  friend HallBasis hall_basis(std::size_t d, std::uint32_t c, std::size_t cap);

 private:
  std::size_t arity_ = 0;
  std::uint32_t max_weight_ = 0;
  std::vector<FormalCommutator> entries_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> halves_;
  std::vector<std::size_t> weight_start_;  // size max_weight + 2
};

HallBasis hall_basis(std::size_t d, std::uint32_t c, std::size_t cap = kDefaultCommutatorCap);

int mobius(std::uint64_t n);

/// (1/w) sum_{e | w} mu(e) d^{w/e}: basic commutators of weight exactly w.
BigInt witt_count(std::size_t d, std::uint32_t w);

}  // namespace wordmaps
