#include "wordmaps/hall_basis.hpp"

#include "wordmaps/error.hpp"

namespace wordmaps {

std::optional<std::pair<std::size_t, std::size_t>> HallBasis::halves(std::size_t j) const { return halves_.at(j); }

std::pair<std::size_t, std::size_t> HallBasis::weight_range(std::uint32_t w) const {
  if (w == 0 || w > max_weight_) return {entries_.size(), entries_.size()};
  return {weight_start_[w], weight_start_[w + 1]};
}

std::size_t HallBasis::count_of_weight(std::uint32_t w) const {
  const auto [first, last] = weight_range(w);
  return last - first;
}

std::string HallBasis::dump() const {
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    out += std::to_string(j + 1) + ' ' + std::to_string(entries_[j].weight()) + ' ' + entries_[j].to_string() + '\n';
  }
  return out;
}

HallBasis hall_basis(std::size_t d, std::uint32_t c, std::size_t cap) {
  if (c == 0) throw Error(Errc::InvalidArgument, "Hall basis needs c >= 1");
  HallBasis basis;
  basis.arity_ = d;
  basis.max_weight_ = c;
  basis.weight_start_.assign(c + 2, 0);

  auto admit = [&](FormalCommutator x, std::optional<std::pair<std::size_t, std::size_t>> parts) {
    if (basis.entries_.size() >= cap) {
      throw Error(Errc::EnumerationCapExceeded, "Hall basis larger than cap " + std::to_string(cap));
    }
    basis.entries_.push_back(std::move(x));
    basis.halves_.push_back(parts);
  };

  basis.weight_start_[1] = 0;
  for (std::uint32_t i = 1; i <= d; ++i) admit(FormalCommutator::leaf(i), std::nullopt);
  for (std::uint32_t n = 2; n <= c; ++n) {
    basis.weight_start_[n] = basis.entries_.size();
    const std::size_t existing = basis.entries_.size();
    for (std::size_t a = 0; a < existing; ++a) {
      const std::uint32_t wa = basis.entries_[a].weight();
      if (wa >= n) break;
      const auto [first, last] = std::pair{basis.weight_start_[n - wa], basis.weight_start_[n - wa + 1]};
      for (std::size_t b = first; b < last && b < a; ++b) {
        const auto& parts = basis.halves_[a];
        if (parts && parts->second > b) continue;
        admit(FormalCommutator::bracket(basis.entries_[a], basis.entries_[b]), std::pair{a, b});
      }
    }
  }
  basis.weight_start_[c + 1] = basis.entries_.size();
  return basis;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "mobius(0)");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

BigInt witt_count(std::size_t d, std::uint32_t w) {
  if (w == 0) throw Error(Errc::InvalidArgument, "witt_count needs w >= 1");
  BigInt total = 0;
  for (std::uint32_t e = 1; e <= w; ++e) {
    if (w % e != 0) continue;
    total += mobius(e) * pow(BigInt(d), w / e);
  }
  return total / w;
}

}  // namespace wordmaps
