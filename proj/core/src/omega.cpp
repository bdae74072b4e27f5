#include "wordmaps/omega.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wordmaps/error.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/invariants.hpp"

namespace wordmaps {

namespace {

constexpr std::size_t kChunk = 4096;
constexpr std::uint32_t kEmptySlot = 0xFFFFFFFFU;

std::uint64_t hash_table(std::span<const Element> t) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (Element x : t) {
    h ^= x;
    h *= 0xFF51AFD7ED558CCDULL;
    h ^= h >> 29U;
  }
  return h;
}

// Open-addressing set of table indices into an arena of fixed-length tables.
class TableSet {
 public:
  explicit TableSet(std::size_t length) : length_(length), slots_(1024, kEmptySlot) {}

  std::size_t size() const noexcept { return hashes_.size(); }
  std::vector<Element>& arena() noexcept { return arena_; }

  // Returns true if the table was new.
  bool insert(std::span<const Element> table, std::uint64_t hash) {
    if ((hashes_.size() + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash & mask;; pos = (pos + 1) & mask) {
      const std::uint32_t idx = slots_[pos];
      if (idx == kEmptySlot) {
        slots_[pos] = static_cast<std::uint32_t>(hashes_.size());
        hashes_.push_back(hash);
        arena_.insert(arena_.end(), table.begin(), table.end());
        return true;
      }
      if (hashes_[idx] == hash &&
          std::memcmp(arena_.data() + idx * length_, table.data(), length_ * sizeof(Element)) == 0) {
        return false;
      }
    }
  }

 private:
  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, kEmptySlot);
    const std::size_t mask = next.size() - 1;
    for (std::size_t idx = 0; idx < hashes_.size(); ++idx) {
      std::size_t pos = hashes_[idx] & mask;
      while (next[pos] != kEmptySlot) pos = (pos + 1) & mask;
      next[pos] = static_cast<std::uint32_t>(idx);
    }
    slots_ = std::move(next);
  }

  std::size_t length_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> hashes_;
  std::vector<Element> arena_;
};

BigInt small_pow(std::uint64_t base, std::uint64_t e) { return pow(BigInt(base), e); }

}  // namespace

std::string_view to_string(ClosureStatus status) noexcept {
  switch (status) {
    case ClosureStatus::Complete: return "complete";
    case ClosureStatus::ClosureCapExceeded: return "closure_cap_exceeded";
    case ClosureStatus::TableCapExceeded: return "table_cap_exceeded";
  }
  return "unknown";
}

WordMapSet word_map_closure(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits) {
  WordMapSet out;
  std::size_t length = 0;
  try {
    length = table_length(group, arity, limits.table_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::TableCapExceeded) throw;
    out.result = {ClosureStatus::TableCapExceeded, 0};
    return out;
  }
  out.table_length = length;

  std::vector<std::vector<Element>> gens;
  for (std::uint32_t var = 1; var <= arity; ++var) {
    std::vector<Element> proj = projection_table(group, arity, var, limits.table_cap).values();
    std::vector<Element> inverse(proj.size());
    std::transform(proj.begin(), proj.end(), inverse.begin(), [&](Element g) { return group.inv(g); });
    gens.push_back(std::move(proj));
    gens.push_back(std::move(inverse));
  }

  TableSet set(length);
  const std::vector<Element> identity(length, FiniteGroup::identity());
  set.insert(identity, hash_table(identity));

  const unsigned workers = std::max(1U, limits.workers);
  std::vector<Element> candidates;
  std::vector<std::uint64_t> candidate_hashes;
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = set.size();

  while (frontier_begin < frontier_end) {
    for (std::size_t chunk = frontier_begin; chunk < frontier_end; chunk += kChunk) {
      const std::size_t items = std::min(kChunk, frontier_end - chunk);
      const std::size_t count = items * gens.size();
      candidates.resize(count * length);
      candidate_hashes.resize(count);

      auto fill = [&](std::size_t first, std::size_t last) {
        const Element* arena = set.arena().data();
        for (std::size_t c = first; c < last; ++c) {
          const Element* source = arena + (chunk + c / gens.size()) * length;
          const Element* gen = gens[c % gens.size()].data();
          Element* target = candidates.data() + c * length;
          for (std::size_t x = 0; x < length; ++x) target[x] = group.mul(source[x], gen[x]);
          candidate_hashes[c] = hash_table({target, length});
        }
      };
      if (workers == 1 || count < 2 * workers) {
        fill(0, count);
      } else {
        std::vector<std::thread> pool;
        const std::size_t per = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
          const std::size_t first = std::min(count, w * per);
          const std::size_t last = std::min(count, first + per);
          if (first < last) pool.emplace_back(fill, first, last);
        }
        for (auto& t : pool) t.join();
      }

      for (std::size_t c = 0; c < count; ++c) {
        if (set.insert({candidates.data() + c * length, length}, candidate_hashes[c]) &&
            set.size() > limits.closure_cap) {
          out.result = {ClosureStatus::ClosureCapExceeded, set.size()};
          out.tables = std::move(set.arena());
          return out;
        }
      }
    }
    frontier_begin = frontier_end;
    frontier_end = set.size();
  }
  out.result = {ClosureStatus::Complete, set.size()};
  out.tables = std::move(set.arena());
  return out;
}

ClosureResult omega_exact(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits) {
  return word_map_closure(group, arity, limits).result;
}

BigInt abelian_omega(const FiniteGroup& group, std::size_t arity) {
  if (!group.is_abelian()) throw Error(Errc::NotAbelian, group.label() + " is not abelian");
  return small_pow(group.exponent(), arity);
}

BigInt omega_lower(const FiniteGroup& group, std::size_t arity) {
  if (arity == 0) return 1;
  const ExpProfile profile = exp_profile(group, arity);
  BigInt total = 1;
  for (std::size_t r = 1; r <= arity; ++r) total *= pow(BigInt(profile.at(r)), binomial(arity, r).convert_to<std::uint64_t>());
  return total;
}

BigInt log2_lower_binomial(const FiniteGroup& group, std::size_t arity) {
  const Nilpotency nil = nilpotency_class(group);
  const std::size_t m = nil.nilpotent ? std::min(*nil.nilpotency_class, arity) : arity;
  BigInt total = 0;
  for (std::size_t r = 1; r <= m; ++r) total += binomial(arity, r);
  return total;
}

NilpotentUpperBound omega_upper_nilpotent(const FiniteGroup& group, std::size_t arity) {
  const Nilpotency nil = nilpotency_class(group);
  if (!nil.nilpotent) throw Error(Errc::NotNilpotent, group.label() + " is not nilpotent");
  NilpotentUpperBound out;
  out.nilpotency_class = static_cast<std::uint32_t>(*nil.nilpotency_class);
  if (out.nilpotency_class == 0) {
    out.formal_count = 0;
  } else {
    out.basis_size = hall_basis(arity, out.nilpotency_class).size();
    out.formal_count = formal_commutator_polynomial(arity, out.nilpotency_class);
  }
  out.bound = small_pow(group.exponent(), out.basis_size);
  out.formal_bound = pow(BigInt(group.exponent()), to_int64(out.formal_count));
  return out;
}

OmegaReport omega_report(const FiniteGroup& group, std::size_t arity, const ClosureLimits& limits) {
  OmegaReport report;
  report.group = group.label();
  report.d = arity;
  const ClosureResult closure = omega_exact(group, arity, limits);
  report.closure_status = std::string(to_string(closure.status));
  report.cap_hit = !closure.complete();
  if (closure.complete()) {
    report.exact = BigInt(closure.count);
    report.omega_bit_length = bit_length(*report.exact);
    report.omega_log2 = log2_decimal(*report.exact);
  } else if (closure.status == ClosureStatus::ClosureCapExceeded) {
    report.partial = BigInt(closure.count);
  }
  report.lower = omega_lower(group, arity);
  report.log2_lower_binomial = log2_lower_binomial(group, arity);
  if (nilpotency_class(group).nilpotent) {
    const auto upper = omega_upper_nilpotent(group, arity);
    report.upper = upper.bound;
    report.upper_formal = upper.formal_bound;
  }
  const double cells = pow(BigInt(group.order()), arity).convert_to<double>();
  report.trivial_upper_log2 = fixed_decimal(cells * std::log2(static_cast<double>(group.order())));
  return report;
}

namespace {

// value <= |G|^(|G|^d)
bool within_trivial_bound(const BigInt& value, const FiniteGroup& group, std::size_t arity) {
  const double bits = pow(BigInt(group.order()), arity).convert_to<double>() * std::log2(static_cast<double>(group.order()));
  if (static_cast<double>(bit_length(value)) <= std::floor(bits)) return true;
  const BigInt cells = pow(BigInt(group.order()), arity);
  if (cells > 1'000'000) return false;
  return value <= pow(BigInt(group.order()), cells.convert_to<std::uint64_t>());
}

std::string le_detail(const BigInt& a, const BigInt& b) { return a.str() + " <= " + b.str(); }

}  // namespace

GrowthProfile growth_profile(const FiniteGroup& group, std::size_t d_max, const ClosureLimits& limits) {
  GrowthProfile profile;
  profile.group = group.label();
  const Nilpotency nil = nilpotency_class(group);
  profile.nilpotent = nil.nilpotent;
  profile.nilpotency_class = nil.nilpotency_class;

  auto check = [&](std::size_t d, std::string name, bool holds, std::string detail) {
    profile.checks.push_back({d, std::move(name), holds, std::move(detail)});
  };

  for (std::size_t d = 0; d <= d_max; ++d) {
    OmegaReport r = omega_report(group, d, limits);
    const BigInt binomial_bound = pow(BigInt(2), to_int64(r.log2_lower_binomial));
    if (r.exact) {
      check(d, "lower <= exact", r.lower <= *r.exact, le_detail(r.lower, *r.exact));
      check(d, "2^binomial_sum <= exact", binomial_bound <= *r.exact, le_detail(binomial_bound, *r.exact));
      check(d, "exact <= |G|^(|G|^d)", within_trivial_bound(*r.exact, group, d),
            "log2 bound " + r.trivial_upper_log2);
      if (r.upper) check(d, "exact <= upper", *r.exact <= *r.upper, le_detail(*r.exact, *r.upper));
    } else if (r.partial) {
      // a partial count is itself a lower bound; only report what it settles
      if (binomial_bound <= *r.partial) {
        check(d, "2^binomial_sum <= partial", true, le_detail(binomial_bound, *r.partial));
      }
    }
    if (r.upper) {
      check(d, "lower <= upper", r.lower <= *r.upper, le_detail(r.lower, *r.upper));
      check(d, "upper <= upper_formal", *r.upper <= *r.upper_formal, le_detail(*r.upper, *r.upper_formal));
    }
    if (!nil.nilpotent) {
      check(d, "binomial_sum = 2^d - 1", r.log2_lower_binomial == pow(BigInt(2), d) - 1,
            r.log2_lower_binomial.str());
    }
    if (!profile.reports.empty() && profile.reports.back().exact && r.exact) {
      check(d, "exact(d-1) <= exact(d)", *profile.reports.back().exact <= *r.exact,
            le_detail(*profile.reports.back().exact, *r.exact));
    }
    profile.reports.push_back(std::move(r));
  }
  const bool all = std::all_of(profile.checks.begin(), profile.checks.end(), [](const auto& c) { return c.holds; });
  profile.verdict = all ? "consistent at tested d" : "inconsistent at tested d";
  return profile;
}

namespace {

nlohmann::json optional_big(const std::optional<BigInt>& x) {
  return x ? nlohmann::json(x->str()) : nlohmann::json(nullptr);
}

nlohmann::json report_json(const OmegaReport& r) {
  nlohmann::json j;
  j["group"] = r.group;
  j["d"] = r.d;
  j["exact"] = optional_big(r.exact);
  j["partial"] = optional_big(r.partial);
  j["closure_status"] = r.closure_status;
  j["lower"] = r.lower.str();
  j["log2_lower_binomial"] = r.log2_lower_binomial.str();
  j["upper"] = optional_big(r.upper);
  j["upper_formal"] = optional_big(r.upper_formal);
  j["trivial_upper_log2"] = r.trivial_upper_log2;
  j["cap_hit"] = r.cap_hit;
  j["omega_bit_length"] = r.omega_bit_length ? nlohmann::json(*r.omega_bit_length) : nlohmann::json(nullptr);
  j["omega_log2"] = r.omega_log2 ? nlohmann::json(*r.omega_log2) : nlohmann::json(nullptr);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const OmegaReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const GrowthProfile& profile, int indent) {
  nlohmann::json j;
  j["group"] = profile.group;
  j["nilpotent"] = profile.nilpotent;
  j["nilpotency_class"] =
      profile.nilpotency_class ? nlohmann::json(*profile.nilpotency_class) : nlohmann::json(nullptr);
  j["reports"] = nlohmann::json::array();
  for (const auto& r : profile.reports) j["reports"].push_back(report_json(r));
  j["checks"] = nlohmann::json::array();
  for (const auto& c : profile.checks) {
    j["checks"].push_back({{"d", c.d}, {"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  }
  j["verdict"] = profile.verdict;
  return j.dump(indent);
}

std::string to_csv(const std::vector<OmegaReport>& reports) {
  std::ostringstream out;
  out << "group,d,exact,partial,closure_status,lower,log2_lower_binomial,upper,upper_formal,"
         "trivial_upper_log2,omega_log2,cap_hit\n";
  auto opt = [](const std::optional<BigInt>& x) { return x ? x->str() : std::string(); };
  for (const auto& r : reports) {
    out << csv_field(r.group) << ',' << r.d << ',' << opt(r.exact) << ',' << opt(r.partial) << ','
        << r.closure_status << ',' << r.lower << ',' << r.log2_lower_binomial << ',' << opt(r.upper) << ','
        << opt(r.upper_formal) << ',' << r.trivial_upper_log2 << ',' << r.omega_log2.value_or("") << ','
        << (r.cap_hit ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace wordmaps
