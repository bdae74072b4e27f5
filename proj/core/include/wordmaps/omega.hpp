#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/finite_group.hpp"
#include "wordmaps/word_map.hpp"

namespace wordmaps {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

struct ClosureLimits {
  std::size_t table_cap = kDefaultTableCap;
  std::size_t closure_cap = kDefaultClosureCap;
  unsigned workers = 1;
};

enum class ClosureStatus { Complete, ClosureCapExceeded, TableCapExceeded };

std::string_view to_string(ClosureStatus status) noexcept;

/// Outcome of the word-map closure. When a cap is hit, `count` is the number
/// of distinct word maps found so far: a lower bound for Omega_d(G).
struct ClosureResult {
  ClosureStatus status = ClosureStatus::Complete;
  std::size_t count = 0;

  bool complete() const noexcept { return status == ClosureStatus::Complete; }
};

/// The distinct word maps G^d -> G found by the closure, stored back to back.
struct WordMapSet {
  std::size_t table_length = 0;
  std::vector<Element> tables;
  ClosureResult result;

  std::size_t size() const noexcept { return result.count; }
  std::span<const Element> table(std::size_t k) const {
    return {tables.data() + k * table_length, table_length};
  }
};

/// Word maps on G^d form the subgroup of all functions G^d -> G (pointwise
/// product) generated by the d coordinate projections. This runs a
/// breadth-first closure from the constant identity map, multiplying by each
/// projection and its inverse, and deduplicating whole tables.
///
/// Level-synchronous: workers compute candidate tables for disjoint slices of
/// the frontier, and one thread inserts them in frontier order, so the set and
/// its numbering do not depend on `workers`.
WordMapSet word_map_closure(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits = {});

/// Omega_d(G) by closure; d = 0 gives 1.
ClosureResult omega_exact(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits = {});

/// exp(G)^d; throws NotAbelian for non-abelian G.
BigInt abelian_omega(const FiniteGroup& group, std::size_t arity);

/// prod_{r=1}^{d} exp_r(G)^{C(d, r)}
BigInt omega_lower(const FiniteGroup& group, std::size_t arity);

/// sum_{r=1}^{m} C(d, r) with m = min(c, d) for nilpotent G of class c, m = d
/// otherwise (then the sum is 2^d - 1).
BigInt log2_lower_binomial(const FiniteGroup& group, std::size_t arity);

struct NilpotentUpperBound {
  std::uint32_t nilpotency_class = 0;
  std::size_t basis_size = 0;    // N_{d,c}
  BigInt formal_count;           // P_c(d), formal commutators of weight <= c
  BigInt bound;                  // exp(G)^{N_{d,c}}
  BigInt formal_bound;           // exp(G)^{P_c(d)}
};

/// Upper bounds for nilpotent G; throws NotNilpotent otherwise.
NilpotentUpperBound omega_upper_nilpotent(const FiniteGroup& group, std::size_t arity);

struct OmegaReport {
  std::string group;
  std::size_t d = 0;
  std::optional<BigInt> exact;
  /// Distinct word maps found when the closure stopped at a cap.
  std::optional<BigInt> partial;
  std::string closure_status;
  BigInt lower;
  BigInt log2_lower_binomial;
  std::optional<BigInt> upper;
  std::optional<BigInt> upper_formal;
  /// |G|^d * log2|G|, decimal.
  std::string trivial_upper_log2;
  bool cap_hit = false;
  /// omega_d = log2 Omega_d(G) for the exact value: bit length and decimal.
  std::optional<std::size_t> omega_bit_length;
  std::optional<std::string> omega_log2;
};

struct GrowthCheck {
  std::size_t d = 0;
  std::string name;
  bool holds = false;
  std::string detail;
};

struct GrowthProfile {
  std::string group;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  std::vector<OmegaReport> reports;
  std::vector<GrowthCheck> checks;
  /// "consistent at tested d" or "inconsistent at tested d"; never a proof claim.
  std::string verdict;
};

OmegaReport omega_report(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits = {});
GrowthProfile growth_profile(const FiniteGroup& group, std::size_t d_max, const ClosureLimits& limits = {});

/// Deterministic JSON (sorted keys, big integers as decimal strings).
std::string to_json(const OmegaReport& report, int indent = 2);
std::string to_json(const GrowthProfile& profile, int indent = 2);
/// CSV with header; one row per d. Column order is fixed:
/// group,d,exact,partial,closure_status,lower,log2_lower_binomial,upper,upper_formal,
/// trivial_upper_log2,omega_log2,cap_hit
std::string to_csv(const std::vector<OmegaReport>& reports);

}  // namespace wordmaps
