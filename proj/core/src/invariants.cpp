#include "wordmaps/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "wordmaps/error.hpp"

namespace wordmaps {

Element nested_commutator(const FiniteGroup& group, std::span<const Element> entries) {
  if (entries.empty()) throw Error(Errc::InvalidArgument, "nested commutator of an empty list");
  Element acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) acc = group.commutator(acc, entries[i]);
  return acc;
}

CommutatorValueSets::CommutatorValueSets(const FiniteGroup& group, std::size_t r_max)
    : group_(&group), r_max_(r_max) {
  if (r_max == 0) throw Error(Errc::InvalidArgument, "value sets need r_max >= 1");
  const std::size_t n = group.order();
  Level first;
  first.values.resize(n);
  std::iota(first.values.begin(), first.values.end(), Element{0});
  first.present.assign(n, true);
  levels_.push_back(std::move(first));

  while (levels_.size() < r_max) {
    const Level& prev = levels_.back();
    Level next;
    next.parent.assign(n, {0, 0});
    next.present.assign(n, false);
    for (Element s : prev.values) {
      for (std::size_t g = 0; g < n; ++g) {
        const Element v = group.commutator(s, static_cast<Element>(g));
        if (!next.present[v]) {
          next.present[v] = true;
          next.parent[v] = {s, static_cast<Element>(g)};
          next.values.push_back(v);
        }
      }
    }
    std::sort(next.values.begin(), next.values.end());
    const bool repeats = next.values == prev.values;
    levels_.push_back(std::move(next));
    if (repeats) break;
  }
}

const CommutatorValueSets::Level& CommutatorValueSets::level(std::size_t r) const {
  if (r == 0 || r > r_max_) throw Error(Errc::InvalidArgument, "level " + std::to_string(r) + " out of range");
  return levels_[std::min(r, levels_.size()) - 1];
}

const std::vector<Element>& CommutatorValueSets::values(std::size_t r) const { return level(r).values; }

std::vector<Element> CommutatorValueSets::witness(std::size_t r, Element value) const {
  if (!level(r).present[value]) {
    throw Error(Errc::InvalidArgument, "element " + std::to_string(value) + " is not a nested " +
                                           std::to_string(r) + "-commutator value");
  }
  std::vector<Element> tuple(r);
  Element v = value;
  for (std::size_t k = r; k >= 2; --k) {
    const auto [s, g] = level(k).parent[v];
    tuple[k - 1] = g;
    v = s;
  }
  tuple[0] = v;
  return tuple;
}

std::uint64_t exp_r(const FiniteGroup& group, std::size_t r) { return exp_profile(group, r).at(r); }

ExpProfile exp_profile(const FiniteGroup& group, std::size_t r_max) {
  ExpProfile profile;
  if (r_max == 0) return profile;
  const CommutatorValueSets sets(group, r_max);
  for (std::size_t r = 1; r <= r_max; ++r) {
    std::uint64_t acc = 1;
    for (Element v : sets.values(r)) acc = std::lcm(acc, std::uint64_t{group.element_order(v)});
    profile.values.push_back(acc);
  }
  return profile;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& group) {
  std::vector<Subgroup> series{whole_group(group)};
  for (;;) {
    const Subgroup& current = series.back();
    std::vector<bool> seen(group.order(), false);
    std::vector<Element> gens;
    for (Element x : current.members) {
      for (std::size_t y = 0; y < group.order(); ++y) {
        const Element c = group.commutator(x, static_cast<Element>(y));
        if (!seen[c]) {
          seen[c] = true;
          gens.push_back(c);
        }
      }
    }
    Subgroup next = generate_subgroup(group, gens);
    if (next == current) break;
    series.push_back(std::move(next));
  }
  return series;
}

Nilpotency nilpotency_class(const FiniteGroup& group) {
  const auto series = lower_central_series(group);
  if (!series.back().is_trivial()) return {false, std::nullopt};
  return {true, series.size() - 1};
}

}  // namespace wordmaps
