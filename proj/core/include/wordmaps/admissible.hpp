#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/finite_group.hpp"
#include "wordmaps/invariants.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// Subsets of {1, ..., d} are bitmasks: bit i-1 set iff i is a member.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxSubsetArity = 24;
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Nonempty subsets of {1, ..., d} ordered by size, then lexicographically by
/// their increasing index tuples.
std::vector<SubsetMask> ordered_subsets(std::size_t arity);
/// Position of `mask` within ordered_subsets(arity).
std::size_t subset_rank(SubsetMask mask, std::size_t arity);
std::vector<std::uint32_t> subset_members(SubsetMask mask);

/// f: nonempty subsets of {1..d} -> N, stored in ordered_subsets order.
class AdmissibleFunction {
 public:
  explicit AdmissibleFunction(std::size_t arity);
  AdmissibleFunction(std::size_t arity, std::vector<std::uint64_t> values);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  std::uint64_t operator()(SubsetMask mask) const { return values_[subset_rank(mask, arity_)]; }
  void set(SubsetMask mask, std::uint64_t value) { values_[subset_rank(mask, arity_)] = value; }

  friend bool operator==(const AdmissibleFunction&, const AdmissibleFunction&) = default;

 private:
  std::size_t arity_;
  std::vector<std::uint64_t> values_;
};

/// f(M) < exp_{|M|}(G) for every nonempty M.
bool is_admissible(const AdmissibleFunction& f, const FiniteGroup& group);
bool is_admissible(const AdmissibleFunction& f, const ExpProfile& profile);

/// w_f: the product, r ascending and index tuples i_1 < ... < i_r in
/// lexicographic order inside, of [X_{i_1}, ..., X_{i_r}]^{f({i_1..i_r})}.
Word build_admissible_word(const AdmissibleFunction& f);

/// prod_{r=1}^{d} exp_r(G)^{C(d, r)}
BigInt admissible_count(const ExpProfile& profile, std::size_t arity);

/// Yields every G-admissible function once, as an odometer over the value
/// ranges with the last subset in ordered_subsets changing fastest.
class AdmissibleEnumerator {
 public:
  AdmissibleEnumerator(const FiniteGroup& group, std::size_t arity,
                       std::uint64_t cap = kDefaultEnumerationCap);

  const BigInt& total() const noexcept { return total_; }
  std::optional<AdmissibleFunction> next();

 private:
  std::size_t arity_;
  std::vector<std::uint64_t> bounds_;
  std::vector<std::uint64_t> current_;
  BigInt total_;
  bool done_ = false;
};

std::vector<AdmissibleFunction> enumerate_admissible(const FiniteGroup& group, std::size_t arity,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

/// For distinct admissible f and g, returns (g_1, ..., g_d) with
/// (w_f)_G(g) != (w_g)_G(g): on the smallest (by size, then lexicographically)
/// subset M where f and g disagree, entries of M form a nested commutator c
/// with c^{f(M)-g(M)} != 1, and every other entry is the identity.
/// Throws NotDistinct if f == g.
std::vector<Element> distinctness_witness(const AdmissibleFunction& f, const AdmissibleFunction& g,
                                          const FiniteGroup& group);

}  // namespace wordmaps
