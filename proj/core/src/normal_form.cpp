#include "wordmaps/normal_form.hpp"

#include <map>
#include <tuple>

#include "wordmaps/error.hpp"

namespace wordmaps {

using Rational = boost::multiprecision::cpp_rational;

namespace {

struct WorkItem {
  std::shared_ptr<const PcWord> word;
  std::size_t pos = 0;
  BigInt reps = 1;
};

std::shared_ptr<const PcWord> single(std::size_t index, BigInt exponent) {
  return std::make_shared<const PcWord>(PcWord{PcSyllable{index, std::move(exponent)}});
}

// Gauss-Jordan inverse of an n x n rational matrix; the caller guarantees it is invertible.
std::vector<Rational> invert_matrix(std::vector<Rational> m, std::size_t n) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw Error(Errc::InternalInvariant, "singular Lie coordinate matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m[pivot * n + k], m[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    const Rational scale = m[col * n + col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col * n + k] /= scale;
      inv[col * n + k] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row * n + col] == 0) continue;
      const Rational factor = m[row * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row * n + k] -= factor * m[col * n + k];
        inv[row * n + k] -= factor * inv[col * n + k];
      }
    }
  }
  return inv;
}

}  // namespace

bool NormalForm::is_identity() const {
  for (const auto& k : exponents)
    if (!k.is_zero()) return false;
  return true;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  const std::size_t da = a.basis ? a.basis->arity() : 0, db = b.basis ? b.basis->arity() : 0;
  const std::uint32_t ca = a.basis ? a.basis->max_weight() : 0, cb = b.basis ? b.basis->max_weight() : 0;
  return da == db && ca == cb && a.exponents == b.exponents;
}

FreeNilpotentGroup::FreeNilpotentGroup(std::size_t arity, std::uint32_t nilpotency_class, std::uint32_t max_class)
    : arity_(arity), class_(nilpotency_class) {
  if (nilpotency_class == 0) throw Error(Errc::InvalidArgument, "nilpotency class must be >= 1");
  if (nilpotency_class > max_class) {
    throw Error(Errc::ClassOutOfSupportedRange, "class " + std::to_string(nilpotency_class) +
                                                    " exceeds the collection limit " + std::to_string(max_class));
  }
  basis_ = std::make_shared<const HallBasis>(hall_basis(arity, nilpotency_class));
  const std::size_t n = basis_->size();
  images_.reserve(n);
  for (const auto& alpha : basis_->entries()) images_.push_back(magnus_image(alpha, arity, nilpotency_class));

  solvers_.resize(nilpotency_class + 1);
  for (std::uint32_t w = 1; w <= nilpotency_class; ++w) {
    LieSolver& solver = solvers_[w];
    const auto [first, last] = basis_->weight_range(w);
    const std::size_t cols = last - first;
    for (std::size_t j = first; j < last; ++j) {
      const auto comp = images_[j].homogeneous(w);
      solver.columns.emplace_back(comp.begin(), comp.end());
    }
    if (cols == 0) continue;
    const std::size_t rows = solver.columns[0].size();

    // pick independent rows by incremental elimination
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < rows && solver.pivot_rows.size() < cols; ++r) {
      std::vector<Rational> v(cols);
      bool any = false;
      for (std::size_t c = 0; c < cols; ++c) {
        v[c] = Rational(solver.columns[c][r]);
        any = any || !solver.columns[c][r].is_zero();
      }
      if (!any) continue;
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        if (v[lead[e]] == 0) continue;
        const Rational factor = v[lead[e]] / echelon[e][lead[e]];
        for (std::size_t c = 0; c < cols; ++c) v[c] -= factor * echelon[e][c];
      }
      std::size_t p = 0;
      while (p < cols && v[p] == 0) ++p;
      if (p == cols) continue;
      echelon.push_back(std::move(v));
      lead.push_back(p);
      solver.pivot_rows.push_back(r);
    }
    if (solver.pivot_rows.size() != cols) {
      throw Error(Errc::InternalInvariant, "Lie elements of weight " + std::to_string(w) + " are dependent");
    }
    std::vector<Rational> square(cols * cols);
    for (std::size_t a = 0; a < cols; ++a)
      for (std::size_t c = 0; c < cols; ++c) square[a * cols + c] = Rational(solver.columns[c][solver.pivot_rows[a]]);
    solver.inverse = invert_matrix(std::move(square), cols);
  }
  memo_.resize(n * n * 4);
}

NormalForm FreeNilpotentGroup::identity() const {
  return NormalForm{basis_, std::vector<BigInt>(basis_->size(), BigInt(0))};
}

std::vector<BigInt> FreeNilpotentGroup::solve_lie(std::uint32_t weight, std::span<const BigInt> component) const {
  const LieSolver& solver = solvers_[weight];
  const std::size_t cols = solver.columns.size();
  std::vector<BigInt> k(cols);
  for (std::size_t a = 0; a < cols; ++a) {
    Rational acc = 0;
    for (std::size_t b = 0; b < cols; ++b) acc += solver.inverse[a * cols + b] * component[solver.pivot_rows[b]];
    if (boost::multiprecision::denominator(acc) != 1) {
      throw Error(Errc::InternalInvariant, "non-integral Lie coordinate at weight " + std::to_string(weight));
    }
    k[a] = boost::multiprecision::numerator(acc);
  }
  for (std::size_t row = 0; row < component.size(); ++row) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc += k[c] * solver.columns[c][row];
    if (acc != component[row]) {
      throw Error(Errc::InternalInvariant, "degree-" + std::to_string(weight) + " component is not a Lie element");
    }
  }
  return k;
}

NormalForm FreeNilpotentGroup::from_series(const TruncatedSeries& series) const {
  if (series.arity() != arity_ || series.degree_bound() != class_) {
    throw Error(Errc::InvalidArgument, "series shape does not match the group");
  }
  NormalForm nf = identity();
  TruncatedSeries rest = series;
  for (std::uint32_t w = 1; w <= class_; ++w) {
    if (rest.lowest_nonconstant_degree() < w) {
      throw Error(Errc::InternalInvariant, "series is not in the image of the free group");
    }
    const auto k = solve_lie(w, rest.homogeneous(w));
    const auto [first, last] = basis_->weight_range(w);
    TruncatedSeries block = TruncatedSeries::one(arity_, class_);
    for (std::size_t j = first; j < last; ++j) {
      nf.exponents[j] = k[j - first];
      if (!k[j - first].is_zero()) block = block * images_[j].power(k[j - first]);
    }
    rest = block.inverse() * rest;
  }
  if (rest != TruncatedSeries::one(arity_, class_)) {
    throw Error(Errc::InternalInvariant, "series is not in the image of the free group");
  }
  return nf;
}

TruncatedSeries FreeNilpotentGroup::to_series(const NormalForm& nf) const {
  TruncatedSeries acc = TruncatedSeries::one(arity_, class_);
  for (std::size_t j = 0; j < nf.exponents.size(); ++j) {
    if (!nf.exponents[j].is_zero()) acc = acc * images_[j].power(nf.exponents[j]);
  }
  return acc;
}

std::shared_ptr<const PcWord> FreeNilpotentGroup::conjugate_word(std::size_t j, std::size_t i, int sign,
                                                                 bool inverted) const {
  const std::size_t n = basis_->size();
  if (j <= i || j >= n) throw Error(Errc::InvalidArgument, "conjugate needs i < j < N");
  const std::size_t slot = ((j * n + i) * 2 + (inverted ? 1 : 0)) * 2 + (sign > 0 ? 1 : 0);
  {
    std::lock_guard lock(memo_mutex_);
    if (memo_[slot]) return memo_[slot];
  }
  PcWord word;
  if (!inverted) {
    const TruncatedSeries ui = images_[i].power(sign);
    const NormalForm nf = from_series(ui.inverse() * images_[j] * ui);
    for (std::size_t k = 0; k < nf.exponents.size(); ++k) {
      if (k < j && !nf.exponents[k].is_zero()) {
        throw Error(Errc::InternalInvariant, "conjugate of u_" + std::to_string(j) + " leaves the tail");
      }
      if (!nf.exponents[k].is_zero()) word.push_back({k, nf.exponents[k]});
    }
    if (word.empty() || word.front().index != j || word.front().exponent != 1) {
      throw Error(Errc::InternalInvariant, "conjugate does not start with its base letter");
    }
  } else {
    const PcWord& forward = *conjugate_word(j, i, sign, false);
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) word.push_back({it->index, -it->exponent});
  }
  auto shared = std::make_shared<const PcWord>(std::move(word));
  std::lock_guard lock(memo_mutex_);
  if (!memo_[slot]) memo_[slot] = std::move(shared);
  return memo_[slot];
}

const PcWord& FreeNilpotentGroup::conjugate(std::size_t j, std::size_t i, int sign) const {
  return *conjugate_word(j, i, sign, false);
}

// Above this many unit moves (|m| times the blocking tail mass), a letter is
// absorbed by conjugating the tail in the Magnus image instead.
namespace {
constexpr unsigned kUnitStepBudget = 64;
}  // namespace

void FreeNilpotentGroup::collect(std::vector<BigInt>& e, const PcWord& word) const {
  const std::size_t n = basis_->size();
  std::vector<WorkItem> stack;
  stack.push_back({std::make_shared<const PcWord>(word), 0, 1});

  while (!stack.empty()) {
    WorkItem& top = stack.back();
    if (top.pos == top.word->size()) {
      if (--top.reps == 0) {
        stack.pop_back();
      } else {
        top.pos = 0;
      }
      continue;
    }
    const std::size_t i = (*top.word)[top.pos].index;
    BigInt m = (*top.word)[top.pos].exponent;
    ++top.pos;
    if (top.word->size() == 1 && top.reps > 1) {
      m *= top.reps;
      top.reps = 1;
    }
    if (m.is_zero()) continue;

    // If everything right of i commutes with u_i, the power slides straight in.
    bool blocked = false;
    for (std::size_t j = i + 1; j < n && !blocked; ++j) blocked = !e[j].is_zero() && !commute_by_weight(i, j);
    if (!blocked) {
      e[i] += m;
      continue;
    }

    BigInt work = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!commute_by_weight(i, j)) work += boost::multiprecision::abs(e[j]);
    work *= boost::multiprecision::abs(m);
    if (work > kUnitStepBudget) {
      // Conjugate the whole tail by u_i^m at once: the result is again a
      // normal form supported right of i.
      TruncatedSeries tail = TruncatedSeries::one(arity_, class_);
      for (std::size_t j = i + 1; j < n; ++j)
        if (!e[j].is_zero()) tail = tail * images_[j].power(e[j]);
      const TruncatedSeries ui = images_[i].power(m);
      const NormalForm moved = from_series(ui.inverse() * tail * ui);
      for (std::size_t k = 0; k <= i; ++k) {
        if (!moved.exponents[k].is_zero()) {
          throw Error(Errc::InternalInvariant, "tail conjugate by u_" + std::to_string(i) + " leaves the tail");
        }
      }
      e[i] += m;
      for (std::size_t j = i + 1; j < n; ++j) e[j] = moved.exponents[j];
      continue;
    }

    const int sign = m > 0 ? 1 : -1;
    std::vector<BigInt> tail(e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end());
    for (std::size_t j = i + 1; j < n; ++j) e[j] = 0;
    e[i] += sign;
    if (m != sign) stack.push_back({single(i, m - sign), 0, 1});
    for (std::size_t j = n; j-- > i + 1;) {
      const BigInt& ej = tail[j - i - 1];
      if (ej.is_zero()) continue;
      if (commute_by_weight(i, j)) {
        stack.push_back({single(j, ej), 0, 1});
      } else {
        stack.push_back({conjugate_word(j, i, sign, ej < 0), 0, boost::multiprecision::abs(ej)});
      }
    }
  }
}

NormalForm FreeNilpotentGroup::normal_form(const Word& w) const {
  if (w.arity() > arity_) {
    for (const auto& s : w.syllables()) {
      if (s.var > arity_) {
        throw Error(Errc::VariableOutOfRange, "x" + std::to_string(s.var) + " in a group on " +
                                                  std::to_string(arity_) + " generators");
      }
    }
  }
  PcWord word;
  word.reserve(w.syllables().size());
  for (const auto& s : w.syllables()) word.push_back({std::size_t{s.var} - 1, BigInt(s.exponent)});
  NormalForm nf = identity();
  collect(nf.exponents, word);
  return nf;
}

PcWord FreeNilpotentGroup::to_pc_word(const NormalForm& nf) const {
  if (nf.exponents.size() != basis_->size()) throw Error(Errc::InvalidArgument, "normal form of another basis");
  PcWord word;
  for (std::size_t j = 0; j < nf.exponents.size(); ++j)
    if (!nf.exponents[j].is_zero()) word.push_back({j, nf.exponents[j]});
  return word;
}

NormalForm FreeNilpotentGroup::multiply(const NormalForm& a, const NormalForm& b) const {
  NormalForm out = identity();
  out.exponents = a.exponents;
  if (out.exponents.size() != basis_->size()) throw Error(Errc::InvalidArgument, "normal form of another basis");
  collect(out.exponents, to_pc_word(b));
  return out;
}

Word FreeNilpotentGroup::to_word(const NormalForm& nf) const { return normal_form_to_word(nf); }

NormalForm normal_form(const Word& w, std::size_t d, std::uint32_t c, std::uint32_t max_class) {
  return free_nilpotent_group(d, c, max_class)->normal_form(w);
}

Word normal_form_to_word(const NormalForm& nf) {
  if (!nf.basis) throw Error(Errc::InvalidArgument, "normal form without a basis");
  const HallBasis& basis = *nf.basis;
  Word w(basis.arity());
  for (std::size_t j = 0; j < nf.exponents.size(); ++j) {
    if (nf.exponents[j].is_zero()) continue;
    w = concat(w, power(commutator_as_word(basis[j], basis.arity()), to_int64(nf.exponents[j])));
  }
  return w;
}

std::shared_ptr<const FreeNilpotentGroup> free_nilpotent_group(std::size_t d, std::uint32_t c,
                                                               std::uint32_t max_class) {
  if (c > max_class) {
    throw Error(Errc::ClassOutOfSupportedRange,
                "class " + std::to_string(c) + " exceeds the collection limit " + std::to_string(max_class));
  }
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const FreeNilpotentGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{d, c}];
  if (!slot) slot = std::make_shared<const FreeNilpotentGroup>(d, c, max_class);
  return slot;
}

}  // namespace wordmaps
