#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

inline constexpr std::size_t kDefaultCommutatorCap = 2'000'000;

/// A syntactic commutator tree over the letters 1..d. Leaves have weight 1 and
/// a bracket weighs the sum of its halves. Equality is structural.
class FormalCommutator {
 public:
  static FormalCommutator leaf(std::uint32_t index);
  static FormalCommutator bracket(const FormalCommutator& left, const FormalCommutator& right);

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  std::uint32_t leaf_index() const noexcept { return node_->leaf; }
  FormalCommutator left() const { return FormalCommutator(node_->left); }
  FormalCommutator right() const { return FormalCommutator(node_->right); }
  std::uint32_t weight() const noexcept { return node_->weight; }
  /// Largest leaf index occurring in the tree.
  std::uint32_t max_leaf() const noexcept { return node_->max_leaf; }

  /// Bracket notation: "2", "[2,1]", "[[2,1],1]".
  std::string to_string() const;

  friend bool operator==(const FormalCommutator& a, const FormalCommutator& b) noexcept;

 private:
  struct Node {
    std::uint32_t leaf = 0;
    std::uint32_t weight = 1;
    std::uint32_t max_leaf = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit FormalCommutator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Node* a, const Node* b) noexcept;

  std::shared_ptr<const Node> node_;
};

/// Every formal commutator of weight <= c over 1..d, ordered by weight; within
/// a weight w by left weight, then left and right in their own orders.
std::vector<FormalCommutator> enumerate_formal_commutators(std::size_t d, std::uint32_t c,
                                                           std::size_t cap = kDefaultCommutatorCap);

/// Size of enumerate_formal_commutators(d, c); enumerates, so it honors `cap`.
BigInt count_formal_commutators(std::size_t d, std::uint32_t c, std::size_t cap = kDefaultCommutatorCap);

/// sum_{w=1}^{c} Cat(w-1) d^w: full binary trees with w labeled leaves.
BigInt formal_commutator_polynomial(std::size_t d, std::uint32_t c);

/// X_alpha with X_[a,b] = [X_a, X_b], as a reduced word of arity max(d, max leaf).
Word commutator_as_word(const FormalCommutator& alpha, std::size_t arity = 0);

}  // namespace wordmaps
