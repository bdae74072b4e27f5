#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/finite_group.hpp"

namespace wordmaps {

/// X_var^exponent; variables are numbered from 1.
struct Syllable {
  std::uint32_t var = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced element of F(X_1, ..., X_d): no zero exponents and no two
/// adjacent syllables on the same variable. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t arity) : arity_(arity) {}

  /// Freely reduces `raw`. Every variable must lie in 1..arity.
  static Word reduce(std::span<const Syllable> raw, std::size_t arity);
  /// As above with arity taken from the largest variable present.
  static Word reduce(std::span<const Syllable> raw);
  static Word generator(std::uint32_t var, std::size_t arity = 0);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Same word viewed in F(X_1, ..., X_arity) for a larger arity.
  Word with_arity(std::size_t arity) const;

  friend bool operator==(const Word& a, const Word& b) noexcept { return a.syllables_ == b.syllables_; }

 private:
  std::size_t arity_ = 0;
  std::vector<Syllable> syllables_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t k);
/// u^-1 v^-1 u v, reduced.
Word commutator_word(const Word& u, const Word& v);
/// [X_{i_1}, ..., X_{i_r}], left nested.
Word nested_commutator_word(std::span<const std::uint32_t> indices, std::size_t arity = 0);

/// Parses the text syntax: juxtaposed factors `x<k>`, `x<k>^<e>`,
/// `[u, v, ...]` (left-nested commutator), `(u)`, each optionally raised to an
/// integer power; `1` or empty text is the identity. Arity 0 means "infer".
Word parse_word(std::string_view text, std::size_t arity = 0);
/// Inverse of parse_word on reduced words: "x1^-1 x2^-1 x1 x2"; "1" for identity.
std::string to_string(const Word& w);

/// Substitutes `args` (one per variable) into `w` using any group operations.
/// `pow(x, e)` must return x^e for any integer e.
template <typename T, typename Mul, typename Pow>
T evaluate_with(const Word& w, std::span<const T> args, const T& identity, Mul&& mul, Pow&& pow) {
  T acc = identity;
  for (const Syllable& s : w.syllables()) acc = mul(acc, pow(args[s.var - 1], s.exponent));
  return acc;
}

/// w_G(args); requires args.size() >= w.arity().
Element evaluate(const Word& w, const FiniteGroup& group, std::span<const Element> args);

}  // namespace wordmaps
