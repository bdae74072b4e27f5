#include "wordmaps/formal_commutator.hpp"

#include <algorithm>

#include "wordmaps/error.hpp"

namespace wordmaps {

FormalCommutator FormalCommutator::leaf(std::uint32_t index) {
  if (index == 0) throw Error(Errc::VariableOutOfRange, "leaves are numbered from 1");
  auto node = std::make_shared<Node>();
  node->leaf = index;
  node->max_leaf = index;
  return FormalCommutator(std::move(node));
}

FormalCommutator FormalCommutator::bracket(const FormalCommutator& left, const FormalCommutator& right) {
  auto node = std::make_shared<Node>();
  node->weight = left.weight() + right.weight();
  node->max_leaf = std::max(left.max_leaf(), right.max_leaf());
  node->left = left.node_;
  node->right = right.node_;
  return FormalCommutator(std::move(node));
}

bool FormalCommutator::equal(const Node* a, const Node* b) noexcept {
  if (a == b) return true;
  if (a->weight != b->weight || a->leaf != b->leaf) return false;
  if (a->left == nullptr) return b->left == nullptr;
  return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
}

bool operator==(const FormalCommutator& a, const FormalCommutator& b) noexcept {
  return FormalCommutator::equal(a.node_.get(), b.node_.get());
}

std::string FormalCommutator::to_string() const {
  if (is_leaf()) return std::to_string(leaf_index());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::vector<FormalCommutator> enumerate_formal_commutators(std::size_t d, std::uint32_t c, std::size_t cap) {
  if (c == 0) throw Error(Errc::InvalidArgument, "weight bound c must be >= 1");
  std::size_t produced = 0;
  auto admit = [&] {
    if (++produced > cap) {
      throw Error(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " formal commutators");
    }
  };
  std::vector<std::vector<FormalCommutator>> by_weight(c + 1);
  for (std::uint32_t i = 1; i <= d; ++i) {
    admit();
    by_weight[1].push_back(FormalCommutator::leaf(i));
  }
  for (std::uint32_t w = 2; w <= c; ++w) {
    for (std::uint32_t a = 1; a < w; ++a) {
      for (const auto& left : by_weight[a]) {
        for (const auto& right : by_weight[w - a]) {
          admit();
          by_weight[w].push_back(FormalCommutator::bracket(left, right));
        }
      }
    }
  }
  std::vector<FormalCommutator> out;
  for (auto& level : by_weight)
    for (auto& x : level) out.push_back(std::move(x));
  return out;
}

BigInt count_formal_commutators(std::size_t d, std::uint32_t c, std::size_t cap) {
  return BigInt(enumerate_formal_commutators(d, c, cap).size());
}

BigInt formal_commutator_polynomial(std::size_t d, std::uint32_t c) {
  BigInt total = 0;
  for (std::uint32_t w = 1; w <= c; ++w) total += catalan(w - 1) * pow(BigInt(d), w);
  return total;
}

Word commutator_as_word(const FormalCommutator& alpha, std::size_t arity) {
  arity = std::max<std::size_t>(arity, alpha.max_leaf());
  if (alpha.is_leaf()) return Word::generator(alpha.leaf_index(), arity);
  return commutator_word(commutator_as_word(alpha.left(), arity), commutator_as_word(alpha.right(), arity));
}

}  // namespace wordmaps
