#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordmaps/bigint.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/magnus.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

inline constexpr std::uint32_t kDefaultMaxCollectionClass = 4;

/// Exponents k_j of prod_j (X_{alpha_j})^{k_j} over a Hall basis.
struct NormalForm {
  std::shared_ptr<const HallBasis> basis;
  std::vector<BigInt> exponents;

  bool is_identity() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

/// A basis letter raised to a power inside the collector.
struct PcSyllable {
  std::size_t index;
  BigInt exponent;
};
using PcWord = std::vector<PcSyllable>;

/// The free nilpotent group of class c on d generators, with elements kept as
/// exponent vectors over the Hall basis.
///
/// normal_form() collects from the left: the normal form so far is a prefix
/// u_1^{e_1} ... u_N^{e_N}; to absorb a letter u_i^{+-1}, the tail beyond i is
/// moved across it using the conjugates u_i^{-+1} u_j u_i^{+-1} (j > i), which
/// are pushed back onto the work stack. Pairs with wt(u_i) + wt(u_j) > c
/// commute. Conjugates are derived once per basis pair from the truncated
/// Magnus embedding and memoized; the memo is mutex-guarded, so one instance
/// can serve concurrent callers.
class FreeNilpotentGroup {
 public:
  FreeNilpotentGroup(std::size_t arity, std::uint32_t nilpotency_class,
                     std::uint32_t max_class = kDefaultMaxCollectionClass);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t nilpotency_class() const noexcept { return class_; }
  const HallBasis& basis() const noexcept { return *basis_; }

  NormalForm identity() const;
  NormalForm normal_form(const Word& w) const;
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  Word to_word(const NormalForm& nf) const;

  /// Magnus coordinates: peels A_1 = prod_{wt 1} u_j^{k_j}, then A_2, ... off
  /// a series in the image of the free group, reading each block of exponents
  /// from the lowest-degree Lie component. Independent of the collector.
  NormalForm from_series(const TruncatedSeries& series) const;
  TruncatedSeries to_series(const NormalForm& nf) const;

  /// u_i^{-sign} u_j u_i^{sign} in normal form (j > i, sign = +-1).
  const PcWord& conjugate(std::size_t j, std::size_t i, int sign) const;
  /// Whether u_i and u_j commute because their commutator has weight > c.
  bool commute_by_weight(std::size_t i, std::size_t j) const {
    return basis_->weight(i) + basis_->weight(j) > class_;
  }

 private:
  struct LieSolver {
    std::vector<std::size_t> pivot_rows;
    // inverse of the pivot-row submatrix, row-major
    std::vector<boost::multiprecision::cpp_rational> inverse;
    std::vector<std::vector<BigInt>> columns;  // Lie coefficients of each basis entry
  };

  std::vector<BigInt> solve_lie(std::uint32_t weight, std::span<const BigInt> component) const;
  /// Right-multiplies the normal form held in `exponents` by `word`.
  void collect(std::vector<BigInt>& exponents, const PcWord& word) const;
  /// conjugate(), or its inverse word when `inverted`.
  std::shared_ptr<const PcWord> conjugate_word(std::size_t j, std::size_t i, int sign, bool inverted) const;
  PcWord to_pc_word(const NormalForm& nf) const;

  std::size_t arity_;
  std::uint32_t class_;
  std::shared_ptr<const HallBasis> basis_;
  std::vector<TruncatedSeries> images_;
  std::vector<LieSolver> solvers_;  // by weight, index 0 unused

  mutable std::mutex memo_mutex_;
  mutable std::vector<std::shared_ptr<const PcWord>> memo_;  // ((j * N + i) * 2 + inverted) * 2 + (sign > 0)
};

/// Normal form of w in the free nilpotent group of class c on d generators.
/// Throws ClassOutOfSupportedRange when c > max_class.
NormalForm normal_form(const Word& w, std::size_t d, std::uint32_t c,
                       std::uint32_t max_class = kDefaultMaxCollectionClass);

/// prod_j commutator_as_word(alpha_j)^{k_j}, reduced.
Word normal_form_to_word(const NormalForm& nf);

/// Shared instance for (d, c), built on first use.
std::shared_ptr<const FreeNilpotentGroup> free_nilpotent_group(std::size_t d, std::uint32_t c,
                                                               std::uint32_t max_class = kDefaultMaxCollectionClass);

}  // namespace wordmaps
