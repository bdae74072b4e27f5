#include "wordmaps/finite_group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>

#include "wordmaps/error.hpp"

namespace wordmaps {

namespace {

std::size_t effective_cap(const GroupLimits& limits) { return std::min(limits.order_cap, kMaxOrder); }

void check_order(std::size_t order, const GroupLimits& limits, std::string_view what) {
  if (order > effective_cap(limits)) {
    throw Error(Errc::OrderLimitExceeded, std::string(what) + " has order " + std::to_string(order) +
                                              " > cap " + std::to_string(effective_cap(limits)));
  }
}

std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

FiniteGroup FiniteGroup::from_multiplication_table(const std::vector<std::vector<std::size_t>>& table,
                                                   const GroupLimits& limits, std::string label,
                                                   std::vector<std::string> element_names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::MalformedTable, "empty table");
  check_order(n, limits, "table");
  if (!element_names.empty() && element_names.size() != n) {
    throw Error(Errc::MalformedTable, "expected " + std::to_string(n) + " element names, got " +
                                          std::to_string(element_names.size()));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(Errc::MalformedTable, "row " + std::to_string(a) + " has length " +
                                            std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error(Errc::MalformedTable, "entry [" + std::to_string(a) + "][" + std::to_string(b) +
                                              "] = " + std::to_string(table[a][b]) + " out of range");
      }
    }
  }

  std::size_t e = n;
  for (std::size_t cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[cand][g] == g && table[g][cand] == g;
    if (ok) e = cand;
  }
  if (e == n) throw Error(Errc::NoIdentity, "no two-sided identity among " + std::to_string(n) + " elements");

  // swap e <-> 0
  auto relabel = [e](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };

  FiniteGroup g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.mult_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g.mult_[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(table[a][b]));
    }
  }
  if (!element_names.empty()) {
    std::swap(element_names[0], element_names[e]);
    g.names_ = std::move(element_names);
  }

  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n;
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mult_[a * n + b] == 0 && g.mult_[b * n + a] == 0) {
        found = b;
        break;
      }
    }
    if (found == n) {
      throw Error(Errc::NoInverse, "element " + std::to_string(relabel(a)) + " has no two-sided inverse");
    }
    g.inv_[a] = static_cast<Element>(found);
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t left = g.mult_[std::size_t{g.mult_[a * n + b]} * n + c];
    const std::size_t right = g.mult_[a * n + g.mult_[b * n + c]];
    if (left != right) {
      throw Error(Errc::NotAssociative,
                  "(ab)c != a(bc) at " + triple_text(relabel(a), relabel(b), relabel(c)));
    }
  };
  if (n <= kExhaustiveAssociativityLimit || limits.force_exhaustive_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t samples = 10 * n * n;
    for (std::size_t s = 0; s < samples; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }

  g.element_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = g.mult_[std::size_t{x} * n + a];
      ++k;
    }
    g.element_order_[a] = k;
    g.exponent_ = std::lcm(g.exponent_, std::uint64_t{k});
  }
  return g;
}

Element FiniteGroup::power(Element a, std::int64_t k) const noexcept {
  const std::int64_t ord = element_order_[a];
  std::int64_t r = k % ord;
  if (r < 0) r += ord;
  Element result = 0;
  Element base = a;
  auto e = static_cast<std::uint64_t>(r);
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mult_[a * order_ + b] != mult_[b * order_ + a]) return false;
  return true;
}

std::string FiniteGroup::element_name(Element a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> rows(order_, std::vector<std::size_t>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = mult_[a * order_ + b];
  return rows;
}

bool Subgroup::contains(Element g) const noexcept {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup generate_subgroup(const FiniteGroup& group, std::span<const Element> generators) {
  std::vector<bool> seen(group.order(), false);
  std::vector<Element> found{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element s : generators) {
      const Element x = group.mul(found[i], s);
      if (!seen[x]) {
        seen[x] = true;
        found.push_back(x);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup{&group, std::move(found)};
}

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup{&group, std::move(all)};
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "cycle notation \"" + std::string(text) + "\": " + why);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > kMaxOrder * 16) fail("point too large");
        ++i;
      }
      if (v == 0) fail("points are numbered from 1");
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  std::size_t m = degree;
  for (const auto& c : cycles)
    for (auto v : c) m = std::max<std::size_t>(m, v);
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<bool> moved(m, false);
  for (const auto& c : cycles) {
    for (auto v : c) {
      if (moved[v - 1]) fail("point " + std::to_string(v) + " appears twice");
      moved[v - 1] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  const std::size_t m = std::max(first.size(), second.size());
  Permutation out(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::uint32_t y = x < first.size() ? first[x] : static_cast<std::uint32_t>(x);
    out[x] = y < second.size() ? second[y] : y;
  }
  return out;
}

FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators, const GroupLimits& limits,
                                        std::string label) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0U);
    std::vector<bool> hit(degree, false);
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g[x] >= g.size() || hit[g[x]]) throw Error(Errc::InvalidArgument, "generator is not a permutation");
      hit[g[x]] = true;
      p[x] = g[x];
    }
    gens.push_back(std::move(p));
  }

  const std::size_t cap = effective_cap(limits);
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation x = compose(elements[i], s);
      if (index.emplace(x, elements.size()).second) {
        elements.push_back(std::move(x));
        if (elements.size() > cap) {
          throw Error(Errc::OrderLimitExceeded,
                      "permutation closure passed cap " + std::to_string(cap));
        }
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(format_cycles(p));
  return FiniteGroup::from_multiplication_table(table, limits, std::move(label), std::move(names));
}

FiniteGroup trivial_group() { return FiniteGroup::from_multiplication_table({{0}}, {}, "trivial", {"1"}); }

FiniteGroup cyclic_group(std::size_t n, const GroupLimits& limits) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group needs n >= 1");
  check_order(n, limits, "cyclic group");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_multiplication_table(table, limits, "C" + std::to_string(n), std::move(names));
}

FiniteGroup dihedral_group(std::size_t n, const GroupLimits& limits) {
  if (n == 0) throw Error(Errc::InvalidArgument, "dihedral group needs n >= 1");
  check_order(2 * n, limits, "dihedral group");
  // element r^i s^a has index i + n*a
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    names.push_back((i == 0 && a == 0) ? "1"
                                       : (i == 0 ? std::string() : "r^" + std::to_string(i)) + (a ? "s" : ""));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, b = y / n;
      const std::size_t rot = a ? (i + n - k) % n : (i + k) % n;
      table[x][y] = rot + n * ((a + b) % 2);
    }
  }
  return FiniteGroup::from_multiplication_table(table, limits, "D" + std::to_string(n), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n, const GroupLimits& limits) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycles("(1 2)", n));
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(parse_cycles(cycle, n));
  }
  return from_permutation_generators(gens, limits, "S" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // index = 2*unit + sign, units 1,i,j,k; unit_mul[u][v] = (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      const auto [s, u] = unit_mul[x / 2][y / 2];
      const std::size_t sign = (x % 2 + y % 2 + static_cast<std::size_t>(s)) % 2;
      table[x][y] = 2 * static_cast<std::size_t>(u) + sign;
    }
  }
  return FiniteGroup::from_multiplication_table(table, {}, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FiniteGroup unitriangular_group(std::size_t size, std::uint32_t p, const GroupLimits& limits) {
  if (size < 2) throw Error(Errc::InvalidArgument, "unitriangular group needs size >= 2");
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const std::size_t coords = size * (size - 1) / 2;
  std::size_t order = 1;
  for (std::size_t t = 0; t < coords; ++t) {
    order *= p;
    if (order > effective_cap(limits)) check_order(order, limits, "unitriangular group");
  }

  // coordinate t <-> above-diagonal entry (i, j), row-major
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) entries.emplace_back(i, j);

  auto decode = [&](std::size_t x) {
    std::vector<std::uint32_t> m(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 1;
    for (const auto& [i, j] : entries) {
      m[i * size + j] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    return m;
  };
  auto encode = [&](const std::vector<std::uint32_t>& m) {
    std::size_t x = 0;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) x = x * p + m[it->first * size + it->second];
    return x;
  };

  std::vector<std::vector<std::uint32_t>> mats(order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    mats[x] = decode(x);
    std::string s = "(";
    for (std::size_t t = 0; t < entries.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(mats[x][entries[t].first * size + entries[t].second]);
    }
    names[x] = s + ")";
  }
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::uint32_t> prod(size * size);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t l = i; l <= j; ++l) acc += std::uint64_t{mats[a][i * size + l]} * mats[b][l * size + j];
          prod[i * size + j] = static_cast<std::uint32_t>(j < i ? 0 : acc % p);
        }
      }
      table[a][b] = encode(prod);
    }
  }
  return FiniteGroup::from_multiplication_table(table, limits,
                                                "UT(" + std::to_string(size) + "," + std::to_string(p) + ")",
                                                std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits) {
  const std::size_t na = a.order(), nb = b.order();
  check_order(na * nb, limits, "direct product");
  const std::size_t n = na * nb;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x % na), xb = static_cast<Element>(x / na);
    names[x] = "(" + a.element_name(xa) + "," + b.element_name(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y % na), yb = static_cast<Element>(y / na);
      table[x][y] = a.mul(xa, ya) + na * std::size_t{b.mul(xb, yb)};
    }
  }
  return FiniteGroup::from_multiplication_table(table, limits, a.label() + "x" + b.label(), std::move(names));
}

}  // namespace wordmaps
