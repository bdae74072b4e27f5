#include <doctest.h>

#include <random>

#include "wordmaps/error.hpp"
#include "wordmaps/finite_group.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/magnus.hpp"
#include "wordmaps/normal_form.hpp"
#include "wordmaps/verify.hpp"

using namespace wordmaps;

namespace {

// Number of trees with w leaves labelled from d letters: T_1 = d,
// T_w = sum_{a=1}^{w-1} T_a T_{w-a}.
BigInt tree_count(std::size_t d, std::uint32_t c) {
  std::vector<BigInt> t(c + 1, 0);
  if (c >= 1) t[1] = d;
  for (std::uint32_t w = 2; w <= c; ++w)
    for (std::uint32_t a = 1; a < w; ++a) t[w] += t[a] * t[w - a];
  BigInt total = 0;
  for (std::uint32_t w = 1; w <= c; ++w) total += t[w];
  return total;
}

// Lyndon words of length n over d letters, by brute force.
std::size_t lyndon_count(std::size_t d, std::size_t n) {
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < n; ++i) total *= d;
  std::vector<std::size_t> a(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (auto& v : a) {
      v = x % d;
      x /= d;
    }
    bool lyndon = true;
    for (std::size_t s = 1; s < n && lyndon; ++s) {
      // rotation by s must be strictly greater
      for (std::size_t k = 0; k < n; ++k) {
        const auto u = a[(k + s) % n], v = a[k];
        if (u != v) {
          lyndon = u > v;
          break;
        }
        if (k == n - 1) lyndon = false;
      }
    }
    if (lyndon) ++count;
  }
  return count;
}

std::int64_t letter_length(const Word& u) {
  std::int64_t n = 0;
  for (const auto& s : u.syllables()) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

std::vector<std::int64_t> small(const NormalForm& nf) {
  std::vector<std::int64_t> out;
  for (const auto& e : nf.exponents) out.push_back(e.convert_to<std::int64_t>());
  return out;
}

}  // namespace

TEST_SUITE("free-nilpotent") {
  TEST_CASE("formal commutator enumeration") {
    auto c1 = enumerate_formal_commutators(2, 1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == FormalCommutator::leaf(1));
    CHECK(c1[1] == FormalCommutator::leaf(2));
    CHECK(enumerate_formal_commutators(2, 2).size() == 6);
    CHECK(enumerate_formal_commutators(2, 3).size() == 22);
    CHECK_THROWS_AS(enumerate_formal_commutators(4, 6, 1000), Error);
    for (const auto& a : enumerate_formal_commutators(3, 4)) {
      CHECK(a.weight() <= 4);
      CHECK(a.max_leaf() <= 3);
    }
  }

  TEST_CASE("formal commutator counts against the tree recursion") {
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::uint32_t c = 1; c <= 5; ++c) {
        CHECK(count_formal_commutators(d, c) == tree_count(d, c));
        CHECK(formal_commutator_polynomial(d, c) == tree_count(d, c));
      }
    for (std::size_t d = 1; d <= 6; ++d) CHECK(formal_commutator_polynomial(d, 1) == d);
    CHECK(formal_commutator_polynomial(2, 2) == 6);
    CHECK(formal_commutator_polynomial(3, 3) == 66);
  }

  TEST_CASE("Witt counts") {
    CHECK(witt_count(5, 1) == 5);
    CHECK(witt_count(2, 2) == 1);
    CHECK(witt_count(2, 3) == 2);
    CHECK(witt_count(3, 2) == 3);
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint32_t w = 1; w <= 6; ++w) CHECK(witt_count(d, w) == lyndon_count(d, w));
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
  }

  TEST_CASE("Hall basis") {
    auto b1 = hall_basis(2, 1);
    CHECK(b1.size() == 2);
    auto b2 = hall_basis(2, 2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[2].to_string() == "[2,1]");
    auto b3 = hall_basis(2, 3);
    REQUIRE(b3.size() == 5);
    CHECK(b3[3].to_string() == "[[2,1],1]");
    CHECK(b3[4].to_string() == "[[2,1],2]");
    CHECK(b3.halves(2) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(!b3.halves(0));
    CHECK(b3.weight_range(3) == std::pair<std::size_t, std::size_t>{3, 5});
    CHECK(b3.dump() == "1 1 1\n2 1 2\n3 2 [2,1]\n4 3 [[2,1],1]\n5 3 [[2,1],2]\n");
    for (std::size_t d = 1; d <= 3; ++d) {
      auto b = hall_basis(d, 5);
      for (std::uint32_t w = 1; w <= 5; ++w) CHECK(BigInt(b.count_of_weight(w)) == witt_count(d, w));
    }
  }

  TEST_CASE("commutator words from trees") {
    CHECK(commutator_as_word(FormalCommutator::leaf(1)) == Word::generator(1));
    const auto a21 = FormalCommutator::bracket(FormalCommutator::leaf(2), FormalCommutator::leaf(1));
    CHECK(commutator_as_word(a21) == parse_word("x2^-1 x1^-1 x2 x1"));
    const auto a211 = FormalCommutator::bracket(a21, FormalCommutator::leaf(1));
    const Word u = commutator_as_word(a211);
    CHECK(letter_length(u) == 10);
    CHECK(u == parse_word("x1^-1 x2^-1 x1 x2 x1^-1 x2^-1 x1^-1 x2 x1^2"));
  }

  TEST_CASE("Magnus series") {
    auto x1 = magnus_image(Word::generator(1), 2, 3);
    CHECK(x1 == TruncatedSeries::generator(2, 3, 1));
    CHECK(x1 - TruncatedSeries::one(2, 3) + TruncatedSeries::one(2, 3) == x1);
    CHECK(x1 * x1.inverse() == TruncatedSeries::one(2, 3));
    CHECK(x1.power(3) == x1 * x1 * x1);
    CHECK(x1.power(-2) == x1.inverse() * x1.inverse());
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const Word u = random_word(rng, 2, 6, 3), v = random_word(rng, 2, 6, 3);
      CHECK(magnus_image(concat(u, v), 2, 4) == magnus_image(u, 2, 4) * magnus_image(v, 2, 4));
    }
    // [x1,x2] = 1 + (X1X2 - X2X1) + higher terms
    auto c = magnus_image(parse_word("[x1,x2]"), 2, 3);
    CHECK(c.lowest_nonconstant_degree() == 2);
    const auto h = c.homogeneous(2);  // X1X1, X1X2, X2X1, X2X2
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);
    CHECK(h[2] == -1);
    CHECK(h[3] == 0);
  }

  TEST_CASE("normal form examples") {
    CHECK(small(normal_form(parse_word("x1^7"), 2, 3)) == std::vector<std::int64_t>{7, 0, 0, 0, 0});
    CHECK(normal_form(parse_word("[x1,x2]"), 2, 1).is_identity());
    CHECK(small(normal_form(parse_word("x2 x1"), 2, 2)) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(small(normal_form(parse_word("[x2,x1]"), 2, 2)) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(small(normal_form(parse_word("[x1,x2]"), 2, 2)) == std::vector<std::int64_t>{0, 0, -1});
    CHECK(small(normal_form(parse_word("[[x2,x1],x1]"), 2, 3)) == std::vector<std::int64_t>{0, 0, 0, 1, 0});
    CHECK_THROWS_AS(normal_form(parse_word("x1"), 2, 5), Error);
    CHECK_THROWS_AS(FreeNilpotentGroup(2, 0), Error);
    CHECK(FreeNilpotentGroup(2, 5, 5).basis().size() == 2 + 1 + 2 + 3 + 6);
  }

  TEST_CASE("x2 x1 = x1 x2 [x2,x1] on all pairs of UT(3,p)") {
    const Word lhs = parse_word("x2 x1");
    const Word rhs = parse_word("x1 x2 [x2,x1]");
    for (std::uint32_t p : {2U, 3U, 5U}) {
      auto g = unitriangular_group(3, p);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) {
          const Element args[] = {a, b};
          REQUIRE(evaluate(lhs, g, args) == evaluate(rhs, g, args));
        }
    }
  }

  TEST_CASE("normal form to word") {
    auto fn = free_nilpotent_group(2, 2);
    CHECK(fn->to_word(fn->identity()).is_identity());
    NormalForm nf = fn->identity();
    nf.exponents = {1, 1, 1};
    CHECK(normal_form_to_word(nf) == parse_word("x1 x2 [x2,x1]"));
    CHECK(normal_form_to_word(nf) == parse_word("x2 x1"));
  }

  TEST_CASE("collection agrees with Magnus peeling") {
    std::mt19937_64 rng(5);
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint32_t c = 1; c <= 4; ++c) {
        auto fn = free_nilpotent_group(d, c);
        for (int t = 0; t < 15; ++t) {
          const Word u = random_word(rng, d, 12, 3);
          const NormalForm a = fn->normal_form(u);
          const NormalForm b = fn->from_series(magnus_image(u, d, c));
          CHECK_MESSAGE(a == b, to_string(u) << " d=" << d << " c=" << c);
          CHECK(fn->to_series(a) == magnus_image(u, d, c));
        }
      }
  }

  TEST_CASE("multiplication is the group law") {
    std::mt19937_64 rng(9);
    auto fn = free_nilpotent_group(3, 3);
    for (int t = 0; t < 20; ++t) {
      const Word u = random_word(rng, 3, 10, 3), v = random_word(rng, 3, 10, 3);
      CHECK(fn->multiply(fn->normal_form(u), fn->normal_form(v)) == fn->normal_form(concat(u, v)));
      CHECK(fn->multiply(fn->normal_form(u), fn->normal_form(invert(u))).is_identity());
    }
  }

  TEST_CASE("round trip on random exponent vectors") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
      const std::size_t d = 2 + t % 2;
      const std::uint32_t c = 1 + static_cast<std::uint32_t>(t % 3);
      auto fn = free_nilpotent_group(d, c);
      NormalForm nf = fn->identity();
      for (auto& e : nf.exponents) e = static_cast<std::int64_t>(rng() % 11) - 5;
      CHECK(normal_form(normal_form_to_word(nf), d, c) == nf);
    }
  }

  TEST_CASE("large exponents stay exact") {
    auto fn = free_nilpotent_group(2, 3);
    const NormalForm nf = fn->normal_form(parse_word("(x2^1000 x1^-999)^3"));
    CHECK(fn->from_series(magnus_image(parse_word("(x2^1000 x1^-999)^3"), 2, 3)) == nf);
    CHECK(nf.exponents[0] == -2997);
    CHECK(nf.exponents[1] == 3000);
  }
}
