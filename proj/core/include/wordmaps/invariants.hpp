#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordmaps/finite_group.hpp"

namespace wordmaps {

/// Left-nested commutator [g_1, ..., g_r] = [[g_1, ..., g_{r-1}], g_r]; a
/// single entry is returned unchanged.
Element nested_commutator(const FiniteGroup& group, std::span<const Element> entries);

/// The value sets S_r = { [g_1, ..., g_r] : g_i in G }, built level by level
/// via S_{r+1} = { [s, g] : s in S_r, g in G }. Each value keeps one witness
/// tuple so callers can recover arguments that produce it.
///
/// Once S_{L+1} = S_L every later level repeats, so only levels up to the
/// first repetition are stored.
class CommutatorValueSets {
 public:
  CommutatorValueSets(const FiniteGroup& group, std::size_t r_max);

  std::size_t depth() const noexcept { return r_max_; }
  /// Sorted members of S_r, 1 <= r <= depth().
  const std::vector<Element>& values(std::size_t r) const;
  /// Arguments (g_1, ..., g_r) with nested_commutator = value.
  std::vector<Element> witness(std::size_t r, Element value) const;

 private:
  struct Level {
    std::vector<Element> values;
    // (s, g) with [s, g] = value, indexed by value; unused at level 1
    std::vector<std::pair<Element, Element>> parent;
    std::vector<bool> present;
  };
  const Level& level(std::size_t r) const;

  const FiniteGroup* group_;
  std::size_t r_max_;
  std::vector<Level> levels_;
};

/// (exp_1(G), ..., exp_{r_max}(G)); exp_r is the lcm of the orders of S_r.
struct ExpProfile {
  std::vector<std::uint64_t> values;

  std::uint64_t at(std::size_t r) const { return values.at(r - 1); }
};

std::uint64_t exp_r(const FiniteGroup& group, std::size_t r);
ExpProfile exp_profile(const FiniteGroup& group, std::size_t r_max);

/// gamma_1 = G, gamma_{i+1} = <[x, y] : x in gamma_i, y in G>, listed until
/// the first repetition (the repeated term is not listed twice).
std::vector<Subgroup> lower_central_series(const FiniteGroup& group);

struct Nilpotency {
  bool nilpotent = false;
  /// Present iff nilpotent; the trivial group has class 0.
  std::optional<std::size_t> nilpotency_class;
};

Nilpotency nilpotency_class(const FiniteGroup& group);

}  // namespace wordmaps
