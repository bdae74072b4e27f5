#include <doctest.h>

#include <random>
#include <set>

#include "wordmaps/admissible.hpp"
#include "wordmaps/builtins.hpp"
#include "wordmaps/error.hpp"
#include "wordmaps/invariants.hpp"
#include "wordmaps/verify.hpp"
#include "wordmaps/word.hpp"
#include "wordmaps/word_map.hpp"

using namespace wordmaps;

namespace {

Word w(std::initializer_list<Syllable> raw) {
  std::vector<Syllable> v(raw);
  return Word::reduce(v);
}

// Reference reduction: expand to letters x^{+-1}, cancel on a stack, regroup.
std::vector<Syllable> letter_reduce(const std::vector<Syllable>& raw) {
  std::vector<std::pair<std::uint32_t, int>> stack;
  for (const auto& s : raw) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k) {
      if (!stack.empty() && stack.back().first == s.var && stack.back().second == -sign)
        stack.pop_back();
      else
        stack.emplace_back(s.var, sign);
    }
  }
  std::vector<Syllable> out;
  for (const auto& [v, e] : stack) {
    if (!out.empty() && out.back().var == v)
      out.back().exponent += e;
    else
      out.push_back({v, e});
  }
  return out;
}

std::int64_t letter_length(const Word& u) {
  std::int64_t n = 0;
  for (const auto& s : u.syllables()) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

}  // namespace

TEST_SUITE("word-engine") {
  TEST_CASE("reduce") {
    CHECK(w({{1, 1}, {1, -1}}).is_identity());
    CHECK(w({{1, 2}, {1, 3}}).syllables() == std::vector<Syllable>{{1, 5}});
    CHECK(w({{1, 1}, {2, 1}, {2, -1}, {1, -1}}).is_identity());
    CHECK(w({{1, 0}, {2, 1}}).syllables() == std::vector<Syllable>{{2, 1}});
    const std::vector<Syllable> big{{1, 3}};
    CHECK_THROWS_AS(Word::reduce(big, 0), Error);
    const std::vector<Syllable> huge{{1, INT64_MAX}, {1, 1}};
    CHECK_THROWS_AS(Word::reduce(huge), Error);
  }

  TEST_CASE("reduce agrees with letter-by-letter cancellation") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
      std::vector<Syllable> raw;
      const int n = static_cast<int>(rng() % 12);
      for (int k = 0; k < n; ++k)
        raw.push_back({static_cast<std::uint32_t>(rng() % 3 + 1), static_cast<std::int64_t>(rng() % 7) - 3});
      std::vector<Syllable> clean;
      for (auto s : raw)
        if (s.exponent != 0) clean.push_back(s);
      CHECK(Word::reduce(raw, 3).syllables() == letter_reduce(clean));
    }
  }

  TEST_CASE("concat and invert") {
    auto x1 = Word::generator(1, 2), x2 = Word::generator(2, 2);
    CHECK(concat(x1, invert(x1)).is_identity());
    CHECK(invert(concat(x1, x2)) == w({{2, -1}, {1, -1}}));
    CHECK(concat(concat(x1, x2), invert(x2)) == x1);
    CHECK(power(concat(x1, x2), 0).is_identity());
    CHECK(power(x1, -3) == w({{1, -3}}));
    CHECK(power(concat(x1, x2), 2) == w({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
    CHECK(power(concat(x1, x2), -2) == invert(power(concat(x1, x2), 2)));
  }

  TEST_CASE("commutator words") {
    auto x1 = Word::generator(1), x2 = Word::generator(2);
    CHECK(commutator_word(x1, x1).is_identity());
    CHECK(commutator_word(x1, x2) == w({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
    CHECK(commutator_word(Word{}, x2).is_identity());
    const std::uint32_t one[] = {1};
    CHECK(nested_commutator_word(one) == x1);
    const std::uint32_t two[] = {1, 2};
    CHECK(nested_commutator_word(two) == w({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
    const std::uint32_t three[] = {1, 2, 3};
    const Word n3 = nested_commutator_word(three);
    CHECK(n3 == commutator_word(nested_commutator_word(two), Word::generator(3)));
    CHECK(n3.syllables().size() == 10);
    CHECK(letter_length(n3) == 10);
  }

  TEST_CASE("parse and print") {
    CHECK(to_string(parse_word("x1^2 x2^-1")) == "x1^2 x2^-1");
    CHECK(to_string(parse_word("1")) == "1");
    CHECK(parse_word("[x1, x2]") == commutator_word(Word::generator(1), Word::generator(2)));
    CHECK(parse_word("[x1, x2, x3]") == parse_word("[[x1,x2],x3]"));
    CHECK(parse_word("(x1 x2)^2") == parse_word("x1 x2 x1 x2"));
    CHECK(parse_word("x1 * x2") == parse_word("x1 x2"));
    CHECK(parse_word("x2", 3).arity() == 3);
    CHECK_THROWS_AS(parse_word("x0"), Error);
    CHECK_THROWS_AS(parse_word("x1^"), Error);
    CHECK_THROWS_AS(parse_word("[x1 x2"), Error);
    CHECK_THROWS_AS(parse_word("x4", 3), Error);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const Word u = random_word(rng, 3, 10, 5);
      CHECK(parse_word(to_string(u), 3) == u);
    }
  }

  TEST_CASE("evaluate") {
    auto s3 = symmetric_group(3);
    Element c = 0;
    for (Element a = 1; a < 6; ++a)
      if (s3.element_order(a) == 3) c = a;
    const Element one[] = {c};
    CHECK(evaluate(Word{}, s3, one) == 0);
    CHECK(evaluate(w({{1, 2}}), s3, one) == s3.inv(c));
    auto d8 = dihedral_group(8);
    const std::uint32_t two[] = {1, 2};
    for (Element a = 0; a < d8.order(); ++a)
      for (Element b = 0; b < d8.order(); ++b) {
        const Element args[] = {a, b};
        CHECK(evaluate(nested_commutator_word(two), d8, args) == nested_commutator(d8, args));
      }
    const Element none[] = {1};
    CHECK_THROWS_AS(evaluate(Word::generator(2), s3, none), Error);
  }

  TEST_CASE("word map tables") {
    auto z2 = cyclic_group(2);
    CHECK(word_map_table(Word{}, z2, 1).values() == std::vector<Element>{0, 0});
    CHECK(word_map_table(Word::generator(1), z2, 1).values() == std::vector<Element>{0, 1});
    CHECK(word_map_table(parse_word("x1 x2"), z2, 2).values() == std::vector<Element>{0, 1, 1, 0});
    auto s3 = symmetric_group(3);
    const auto t = word_map_table(parse_word("x2"), s3, 2);
    // g_1 is the fastest-varying coordinate
    for (std::size_t i = 0; i < 36; ++i) CHECK(t.values()[i] == i / 6);
    const Element args[] = {4, 5};
    CHECK(encode_arguments(s3, args) == 4 + 6 * 5);
    CHECK(decode_arguments(s3, 2, 34) == std::vector<Element>{4, 5});
    CHECK(t == projection_table(s3, 2, 2));
    CHECK_THROWS_AS(table_length(s3, 9), Error);
    CHECK(table_length(s3, 3) == 216);
    CHECK(table_length(s3, 0) == 1);
  }

  TEST_CASE("admissible subsets and ranks") {
    const auto subs = ordered_subsets(3);
    CHECK(subs == std::vector<SubsetMask>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
    for (std::size_t k = 0; k < subs.size(); ++k) CHECK(subset_rank(subs[k], 3) == k);
    const auto s5 = ordered_subsets(5);
    for (std::size_t k = 0; k < s5.size(); ++k) CHECK(subset_rank(s5[k], 5) == k);
    CHECK(subset_members(0b101) == std::vector<std::uint32_t>{1, 3});
  }

  TEST_CASE("is_admissible") {
    auto z2 = cyclic_group(2);
    CHECK(is_admissible(AdmissibleFunction(1, {1}), z2));
    CHECK(!is_admissible(AdmissibleFunction(1, {2}), z2));
    CHECK(is_admissible(AdmissibleFunction(2, {5, 0, 2}), symmetric_group(3)));
    CHECK(!is_admissible(AdmissibleFunction(2, {5, 0, 3}), symmetric_group(3)));
  }

  TEST_CASE("build_admissible_word") {
    CHECK(build_admissible_word(AdmissibleFunction(1, {4})) == w({{1, 4}}));
    auto word = build_admissible_word(AdmissibleFunction(2, {2, 3, 2}));
    const Word expect = concat(concat(w({{1, 2}}), w({{2, 3}})), power(parse_word("[x1,x2]"), 2));
    CHECK(word == expect);
    CHECK(build_admissible_word(AdmissibleFunction(2)).is_identity());
    AdmissibleFunction f(3);
    f.set(0b101, 1);
    CHECK(f.values()[4] == 1);
    CHECK(build_admissible_word(f) == parse_word("[x1,x3]"));
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_admissible(cyclic_group(2), 1).size() == 2);
    CHECK(enumerate_admissible(symmetric_group(3), 2).size() == 108);
    CHECK(enumerate_admissible(quaternion_group(), 2).size() == 32);
    CHECK(admissible_count(exp_profile(symmetric_group(3), 3), 3) == 17496);
    CHECK_THROWS_AS(AdmissibleEnumerator(symmetric_group(3), 3, 1000), Error);
    // last subset changes fastest
    auto fs = enumerate_admissible(quaternion_group(), 2);
    CHECK(fs[0].values() == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(fs[1].values() == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(fs[2].values() == std::vector<std::uint64_t>{0, 1, 0});
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& f : fs) distinct.insert(f.values());
    CHECK(distinct.size() == 32);
  }

  TEST_CASE("distinctness witnesses") {
    auto z2 = cyclic_group(2);
    auto wz = distinctness_witness(AdmissibleFunction(1, {0}), AdmissibleFunction(1, {1}), z2);
    CHECK(wz == std::vector<Element>{1});

    auto s3 = symmetric_group(3);
    AdmissibleFunction f(2, {0, 0, 1}), g(2, {0, 0, 0});
    auto ws = distinctness_witness(f, g, s3);
    CHECK(evaluate(build_admissible_word(f), s3, ws) != evaluate(build_admissible_word(g), s3, ws));
    CHECK(s3.commutator(ws[0], ws[1]) != 0);

    auto q8 = quaternion_group();
    auto wq = distinctness_witness(AdmissibleFunction(2, {1, 0, 0}), AdmissibleFunction(2, {3, 0, 0}), q8);
    CHECK(q8.element_order(wq[0]) == 4);
    CHECK(wq[1] == 0);

    CHECK_THROWS_AS(distinctness_witness(f, f, s3), Error);
  }
}
