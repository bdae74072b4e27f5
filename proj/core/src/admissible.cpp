#include "wordmaps/admissible.hpp"

#include <algorithm>
#include <bit>

#include "wordmaps/error.hpp"

namespace wordmaps {

namespace {

std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_arity(std::size_t arity) {
  if (arity > kMaxSubsetArity) {
    throw Error(Errc::InvalidArgument, "subset arity " + std::to_string(arity) + " exceeds " +
                                           std::to_string(kMaxSubsetArity));
  }
}

std::int64_t signed_difference(std::uint64_t a, std::uint64_t b) {
  return a >= b ? static_cast<std::int64_t>(a - b) : -static_cast<std::int64_t>(b - a);
}

}  // namespace

std::vector<SubsetMask> ordered_subsets(std::size_t arity) {
  check_arity(arity);
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << arity) - 1);
  for (std::size_t r = 1; r <= arity; ++r) {
    // lexicographic r-combinations of 1..d
    std::vector<std::uint32_t> idx(r);
    for (std::size_t t = 0; t < r; ++t) idx[t] = static_cast<std::uint32_t>(t + 1);
    for (;;) {
      SubsetMask m = 0;
      for (auto i : idx) m |= SubsetMask{1} << (i - 1);
      out.push_back(m);
      std::size_t t = r;
      while (t > 0 && idx[t - 1] == arity - r + t) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t u = t; u < r; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return out;
}

std::vector<std::uint32_t> subset_members(SubsetMask mask) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 1; mask != 0; ++i, mask >>= 1U)
    if (mask & 1U) members.push_back(i);
  return members;
}

std::size_t subset_rank(SubsetMask mask, std::size_t arity) {
  if (mask == 0 || (arity < 32 && (mask >> arity) != 0)) {
    throw Error(Errc::InvalidArgument, "subset mask " + std::to_string(mask) + " invalid for arity " +
                                           std::to_string(arity));
  }
  const auto r = static_cast<std::size_t>(std::popcount(mask));
  std::uint64_t rank = 0;
  for (std::size_t s = 1; s < r; ++s) rank += small_binomial(arity, s);
  std::uint32_t prev = 0;
  std::size_t t = 1;
  for (auto i : subset_members(mask)) {
    for (std::uint32_t j = prev + 1; j < i; ++j) rank += small_binomial(arity - j, r - t);
    prev = i;
    ++t;
  }
  return static_cast<std::size_t>(rank);
}

AdmissibleFunction::AdmissibleFunction(std::size_t arity)
    : arity_(arity), values_((check_arity(arity), (std::size_t{1} << arity) - 1), 0) {}

AdmissibleFunction::AdmissibleFunction(std::size_t arity, std::vector<std::uint64_t> values)
    : arity_(arity), values_(std::move(values)) {
  check_arity(arity);
  if (values_.size() != (std::size_t{1} << arity) - 1) {
    throw Error(Errc::InvalidArgument, "admissible function of arity " + std::to_string(arity) + " needs " +
                                           std::to_string((std::size_t{1} << arity) - 1) + " values");
  }
}

bool is_admissible(const AdmissibleFunction& f, const ExpProfile& profile) {
  const auto subsets = ordered_subsets(f.arity());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const auto r = static_cast<std::size_t>(std::popcount(subsets[k]));
    if (f.values()[k] >= profile.at(r)) return false;
  }
  return true;
}

bool is_admissible(const AdmissibleFunction& f, const FiniteGroup& group) {
  if (f.arity() == 0) return true;
  return is_admissible(f, exp_profile(group, f.arity()));
}

Word build_admissible_word(const AdmissibleFunction& f) {
  const auto subsets = ordered_subsets(f.arity());
  Word w(f.arity());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const std::uint64_t e = f.values()[k];
    if (e == 0) continue;
    if (e > static_cast<std::uint64_t>(INT64_MAX)) throw Error(Errc::ExponentOverflow, "admissible value too large");
    const auto members = subset_members(subsets[k]);
    w = concat(w, power(nested_commutator_word(members, f.arity()), static_cast<std::int64_t>(e)));
  }
  return w;
}

BigInt admissible_count(const ExpProfile& profile, std::size_t arity) {
  BigInt total = 1;
  for (std::size_t r = 1; r <= arity; ++r) total *= pow(BigInt(profile.at(r)), small_binomial(arity, r));
  return total;
}

AdmissibleEnumerator::AdmissibleEnumerator(const FiniteGroup& group, std::size_t arity, std::uint64_t cap)
    : arity_(arity) {
  check_arity(arity);
  const ExpProfile profile = arity > 0 ? exp_profile(group, arity) : ExpProfile{};
  total_ = admissible_count(profile, arity);
  if (total_ > cap) {
    throw Error(Errc::EnumerationCapExceeded, to_string(total_) + " admissible functions exceed cap " +
                                                  std::to_string(cap));
  }
  for (SubsetMask m : ordered_subsets(arity)) bounds_.push_back(profile.at(static_cast<std::size_t>(std::popcount(m))));
  current_.assign(bounds_.size(), 0);
}

std::optional<AdmissibleFunction> AdmissibleEnumerator::next() {
  if (done_) return std::nullopt;
  AdmissibleFunction out(arity_, current_);
  std::size_t k = current_.size();
  for (;;) {
    if (k == 0) {
      done_ = true;
      break;
    }
    --k;
    if (++current_[k] < bounds_[k]) break;
    current_[k] = 0;
  }
  return out;
}

std::vector<AdmissibleFunction> enumerate_admissible(const FiniteGroup& group, std::size_t arity,
                                                     std::uint64_t cap) {
  AdmissibleEnumerator it(group, arity, cap);
  std::vector<AdmissibleFunction> out;
  out.reserve(it.total().convert_to<std::size_t>());
  while (auto f = it.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<Element> distinctness_witness(const AdmissibleFunction& f, const AdmissibleFunction& g,
                                          const FiniteGroup& group) {
  if (f.arity() != g.arity()) throw Error(Errc::InvalidArgument, "admissible functions of different arity");
  if (f == g) throw Error(Errc::NotDistinct, "the two admissible functions are equal");
  const std::size_t d = f.arity();
  const auto subsets = ordered_subsets(d);
  std::size_t k = 0;
  while (f.values()[k] == g.values()[k]) ++k;
  const SubsetMask mask = subsets[k];
  const auto members = subset_members(mask);
  const std::size_t r = members.size();
  const std::int64_t diff = signed_difference(f.values()[k], g.values()[k]);

  const Word wf = build_admissible_word(f);
  const Word wg = build_admissible_word(g);
  auto separates = [&](const std::vector<Element>& args) { return evaluate(wf, group, args) != evaluate(wg, group, args); };
  auto place = [&](std::span<const Element> entries) {
    std::vector<Element> args(d, FiniteGroup::identity());
    for (std::size_t t = 0; t < r; ++t) args[members[t] - 1] = entries[t];
    return args;
  };

  const CommutatorValueSets sets(group, r);
  for (Element c : sets.values(r)) {
    if (group.power(c, diff) == FiniteGroup::identity()) continue;
    auto args = place(sets.witness(r, c));
    if (separates(args)) return args;
    break;
  }

  // Exhaustive fallback over G^r for small r.
  if (r <= 3) {
    std::vector<Element> entries(r, 0);
    for (;;) {
      if (group.power(nested_commutator(group, entries), diff) != FiniteGroup::identity()) {
        auto args = place(entries);
        if (separates(args)) return args;
      }
      std::size_t t = 0;
      while (t < r && ++entries[t] == group.order()) entries[t++] = 0;
      if (t == r) break;
    }
  }
  throw Error(Errc::InternalInvariant,
              "no separating argument found; are both functions admissible for " + group.label() + "?");
}

}  // namespace wordmaps
