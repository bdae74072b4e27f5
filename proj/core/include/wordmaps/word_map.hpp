#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wordmaps/finite_group.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

inline constexpr std::size_t kDefaultTableCap = 10'000'000;

/// |G|^d, or throws TableCapExceeded when it exceeds `cap`.
std::size_t table_length(const FiniteGroup& group, std::size_t arity, std::size_t cap = kDefaultTableCap);

/// Mixed-radix position of (g_1, ..., g_d) with g_1 least significant.
std::size_t encode_arguments(const FiniteGroup& group, std::span<const Element> args);
std::vector<Element> decode_arguments(const FiniteGroup& group, std::size_t arity, std::size_t index);

/// A function G^d -> G stored as its full value table, entry i holding the
/// value at decode_arguments(i). Two tables over the same group and arity are
/// equal exactly when they are the same function.
class WordMapTable {
 public:
  WordMapTable(const FiniteGroup& group, std::size_t arity, std::vector<Element> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Element>& values() const noexcept { return values_; }
  Element at(std::span<const Element> args) const { return values_[encode_arguments(*group_, args)]; }

  /// First argument index at which the two functions differ, or size() if none.
  std::size_t first_difference(const WordMapTable& other) const;

  friend bool operator==(const WordMapTable& a, const WordMapTable& b) noexcept {
    return a.group_ == b.group_ && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

 private:
  const FiniteGroup* group_;
  std::size_t arity_;
  std::vector<Element> values_;
};

/// Tabulates w_G on all of G^arity; requires w.arity() <= arity.
WordMapTable word_map_table(const Word& w, const FiniteGroup& group, std::size_t arity,
                            std::size_t table_cap = kDefaultTableCap);

/// The coordinate projection (g_1, ..., g_d) -> g_var as a table.
WordMapTable projection_table(const FiniteGroup& group, std::size_t arity, std::uint32_t var,
                              std::size_t table_cap = kDefaultTableCap);

}  // namespace wordmaps
