#include "wordmaps/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wordmaps/error.hpp"

namespace wordmaps {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::ExponentOverflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::ExponentOverflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Error(Errc::ExponentOverflow, "negating INT64_MIN");
  return -a;
}

// Appends s to a reduced stack, keeping it reduced.
void push_reduced(std::vector<Syllable>& stack, Syllable s) {
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().var == s.var) {
    stack.back().exponent = checked_add(stack.back().exponent, s.exponent);
    if (stack.back().exponent == 0) stack.pop_back();
    return;
  }
  stack.push_back(s);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  std::vector<Syllable> parse_all() {
    auto out = product();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

  std::size_t max_var() const noexcept { return max_var_; }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError,
                "word \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == 'X' || c == '[' || c == '(' || c == '1';
  }

  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::vector<Syllable> product() {
    std::vector<Syllable> out;
    while (at_factor_start()) {
      for (const auto& s : factor()) push_reduced(out, s);
    }
    return out;
  }

  std::vector<Syllable> factor() {
    std::vector<Syllable> base = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::int64_t e = integer();
      base = raise(base, e);
    }
    return base;
  }

  static std::vector<Syllable> raise(const std::vector<Syllable>& base, std::int64_t e) {
    if (base.size() == 1) return {{base[0].var, checked_mul(base[0].exponent, e)}};
    return power(Word::reduce(base), e).syllables();
  }

  std::vector<Syllable> atom() {
    skip();
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a variable index");
      }
      const std::int64_t k = integer();
      if (k < 1) fail("variables are numbered from 1");
      if (arity_ != 0 && static_cast<std::size_t>(k) > arity_) {
        throw Error(Errc::VariableOutOfRange,
                    "x" + std::to_string(k) + " with arity " + std::to_string(arity_));
      }
      if (static_cast<std::uint64_t>(k) > std::numeric_limits<std::uint32_t>::max()) fail("variable index too large");
      max_var_ = std::max(max_var_, static_cast<std::size_t>(k));
      return {{static_cast<std::uint32_t>(k), 1}};
    }
    if (c == '(') {
      ++pos_;
      auto inner = product();
      expect(')');
      return inner;
    }
    // '['
    ++pos_;
    Word acc = Word::reduce(product());
    std::size_t entries = 1;
    skip();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      acc = commutator_word(acc, Word::reduce(product()));
      ++entries;
      skip();
    }
    if (entries < 2) fail("commutator needs at least two entries");
    expect(']');
    return acc.syllables();
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

Word Word::reduce(std::span<const Syllable> raw, std::size_t arity) {
  Word w(arity);
  for (const Syllable& s : raw) {
    if (s.var == 0 || s.var > arity) {
      throw Error(Errc::VariableOutOfRange,
                  "variable " + std::to_string(s.var) + " with arity " + std::to_string(arity));
    }
    push_reduced(w.syllables_, s);
  }
  return w;
}

Word Word::reduce(std::span<const Syllable> raw) {
  std::size_t arity = 0;
  for (const Syllable& s : raw) arity = std::max<std::size_t>(arity, s.var);
  return reduce(raw, arity);
}

Word Word::generator(std::uint32_t var, std::size_t arity) {
  const Syllable s{var, 1};
  return reduce(std::span<const Syllable>(&s, 1), std::max<std::size_t>(arity, var));
}

Word Word::with_arity(std::size_t arity) const {
  if (arity < arity_) {
    for (const auto& s : syllables_) {
      if (s.var > arity) {
        throw Error(Errc::VariableOutOfRange,
                    "cannot view word with x" + std::to_string(s.var) + " at arity " + std::to_string(arity));
      }
    }
  }
  Word w = *this;
  w.arity_ = arity;
  return w;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Syllable> raw = u.syllables();
  for (const auto& s : v.syllables()) push_reduced(raw, s);
  Word w(std::max(u.arity(), v.arity()));
  return Word::reduce(raw, w.arity());
}

Word invert(const Word& u) {
  std::vector<Syllable> raw;
  raw.reserve(u.syllables().size());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
    raw.push_back({it->var, checked_neg(it->exponent)});
  }
  return Word::reduce(raw, u.arity());
}

Word power(const Word& u, std::int64_t k) {
  if (k == 0 || u.is_identity()) return Word(u.arity());
  if (u.syllables().size() == 1) {
    const Syllable s{u.syllables()[0].var, checked_mul(u.syllables()[0].exponent, k)};
    return Word::reduce(std::span<const Syllable>(&s, 1), u.arity());
  }
  Word base = k < 0 ? invert(u) : u;
  auto e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word result(u.arity());
  while (e > 0) {
    if (e & 1U) result = concat(result, base);
    e >>= 1U;
    if (e > 0) base = concat(base, base);
  }
  return result;
}

Word commutator_word(const Word& u, const Word& v) {
  return concat(concat(invert(u), invert(v)), concat(u, v));
}

Word nested_commutator_word(std::span<const std::uint32_t> indices, std::size_t arity) {
  if (indices.empty()) throw Error(Errc::InvalidArgument, "nested commutator word of an empty list");
  for (auto i : indices) arity = std::max<std::size_t>(arity, i);
  Word acc = Word::generator(indices[0], arity);
  for (std::size_t k = 1; k < indices.size(); ++k) acc = commutator_word(acc, Word::generator(indices[k], arity));
  return acc;
}

Word parse_word(std::string_view text, std::size_t arity) {
  Parser parser(text, arity);
  const auto raw = parser.parse_all();
  return Word::reduce(raw, arity != 0 ? arity : parser.max_var());
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(s.var);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

Element evaluate(const Word& w, const FiniteGroup& group, std::span<const Element> args) {
  if (args.size() < w.arity()) {
    throw Error(Errc::InvalidArgument, "word of arity " + std::to_string(w.arity()) + " given " +
                                           std::to_string(args.size()) + " arguments");
  }
  return evaluate_with<Element>(
      w, args, FiniteGroup::identity(), [&](Element a, Element b) { return group.mul(a, b); },
      [&](Element a, std::int64_t e) { return group.power(a, e); });
}

}  // namespace wordmaps
