#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordmaps {

/// Index of an element inside a FiniteGroup. Index 0 is always the identity.
using Element = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 2000;
/// Hard ceiling imposed by the Element width.
inline constexpr std::size_t kMaxOrder = 65535;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;

struct GroupLimits {
  std::size_t order_cap = kDefaultOrderCap;
  /// Check all n^3 triples even above kExhaustiveAssociativityLimit.
  bool force_exhaustive_associativity = false;
};

/// A finite group given by its full multiplication table.
///
/// Immutable after construction, so a `const FiniteGroup&` may be shared freely
/// across threads. Inverses and element orders are cached at construction.
class FiniteGroup {
 public:
  /// Validates `table` (square, in-range, identity, inverses, associativity) and
  /// relabels so the identity sits at index 0. Element names, if given, follow
  /// the relabeling.
  static FiniteGroup from_multiplication_table(const std::vector<std::vector<std::size_t>>& table,
                                               const GroupLimits& limits = {}, std::string label = {},
                                               std::vector<std::string> element_names = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return mult_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return element_order_[a]; }
  /// a^k for any integer k, reduced modulo the order of a.
  Element power(Element a, std::int64_t k) const noexcept;
  /// [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }

  std::span<const Element> row(Element a) const noexcept {
    return {mult_.data() + std::size_t{a} * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inv_; }

  /// lcm of all element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept;
  bool is_trivial() const noexcept { return order_ == 1; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  /// Display name; falls back to the index when no names were supplied.
  std::string element_name(Element a) const;

  /// Rows of the table as plain indices, e.g. for serialization.
  std::vector<std::vector<std::size_t>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t exponent_ = 1;
  std::string label_;
  std::vector<std::string> names_;
};

/// A subgroup as a sorted member list of a parent group. Non-owning: the parent
/// must outlive it.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Element> members;

  std::size_t order() const noexcept { return members.size(); }
  bool is_trivial() const noexcept { return members.size() == 1; }
  bool contains(Element g) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent == b.parent && a.members == b.members;
  }
};

/// Breadth-first closure of `generators` under multiplication.
Subgroup generate_subgroup(const FiniteGroup& group, std::span<const Element> generators);
Subgroup whole_group(const FiniteGroup& group);

/// A permutation of {0, ..., m-1} stored as its image list. Products compose
/// left to right: (p * q)(x) = q(p(x)).
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation over the points 1..m, e.g. "(1 2 3)(4 5)" or "()".
/// The result has degree max(degree, largest point mentioned).
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);
std::string format_cycles(const Permutation& p);
Permutation compose(const Permutation& first, const Permutation& second);

/// Group generated by permutations; elements are numbered in breadth-first
/// order from the identity, trying generators in the given order. Element
/// names are cycle strings.
FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators,
                                        const GroupLimits& limits = {}, std::string label = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n, const GroupLimits& limits = {});
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n, const GroupLimits& limits = {});
FiniteGroup symmetric_group(std::size_t n, const GroupLimits& limits = {});
FiniteGroup quaternion_group();
/// Upper unitriangular size x size matrices over the field with p elements.
FiniteGroup unitriangular_group(std::size_t size, std::uint32_t p, const GroupLimits& limits = {});
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits = {});

bool is_prime(std::uint64_t n) noexcept;

}  // namespace wordmaps
