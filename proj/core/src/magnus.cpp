#include "wordmaps/magnus.hpp"

#include "wordmaps/error.hpp"

namespace wordmaps {

TruncatedSeries::TruncatedSeries(std::size_t arity, std::uint32_t degree_bound)
    : arity_(arity), degree_bound_(degree_bound) {
  offsets_.resize(degree_bound + 2);
  std::size_t block = 1;
  std::size_t total = 0;
  for (std::uint32_t n = 0; n <= degree_bound; ++n) {
    offsets_[n] = total;
    total += block;
    block *= arity;
  }
  offsets_[degree_bound + 1] = total;
  coeffs_.assign(total, 0);
}

TruncatedSeries TruncatedSeries::one(std::size_t arity, std::uint32_t degree_bound) {
  TruncatedSeries s(arity, degree_bound);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(std::size_t arity, std::uint32_t degree_bound, std::uint32_t var) {
  if (var == 0 || var > arity) throw Error(Errc::VariableOutOfRange, "generator x" + std::to_string(var));
  TruncatedSeries s = one(arity, degree_bound);
  if (degree_bound >= 1) s.coeffs_[s.offsets_[1] + var - 1] = 1;
  return s;
}

std::span<const BigInt> TruncatedSeries::homogeneous(std::uint32_t n) const {
  if (n > degree_bound_) throw Error(Errc::InvalidArgument, "degree above truncation bound");
  return {coeffs_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

std::span<BigInt> TruncatedSeries::homogeneous(std::uint32_t n) {
  if (n > degree_bound_) throw Error(Errc::InvalidArgument, "degree above truncation bound");
  return {coeffs_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

std::uint32_t TruncatedSeries::lowest_nonconstant_degree() const {
  for (std::uint32_t n = 1; n <= degree_bound_; ++n)
    for (const auto& x : homogeneous(n))
      if (!x.is_zero()) return n;
  return degree_bound_ + 1;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  if (arity_ != other.arity_ || degree_bound_ != other.degree_bound_) {
    throw Error(Errc::InvalidArgument, "series of different shapes");
  }
  TruncatedSeries out(arity_, degree_bound_);
  for (std::uint32_t p = 0; p <= degree_bound_; ++p) {
    const auto left = homogeneous(p);
    for (std::uint32_t q = 0; p + q <= degree_bound_; ++q) {
      const auto right = other.homogeneous(q);
      auto target = out.homogeneous(p + q);
      const std::size_t stride = right.size();
      for (std::size_t a = 0; a < left.size(); ++a) {
        if (left[a].is_zero()) continue;
        for (std::size_t b = 0; b < right.size(); ++b) {
          if (right[b].is_zero()) continue;
          target[a * stride + b] += left[a] * right[b];
        }
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  TruncatedSeries out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += other.coeffs_.at(k);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  TruncatedSeries out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] -= other.coeffs_.at(k);
  return out;
}

void TruncatedSeries::require_unit_constant() const {
  if (coeffs_[0] != 1) throw Error(Errc::InvalidArgument, "series must have constant term 1");
}

TruncatedSeries TruncatedSeries::inverse() const { return power(-1); }

TruncatedSeries TruncatedSeries::power(const BigInt& k) const {
  require_unit_constant();
  // (1 + u)^k = sum_m C(k, m) u^m, u nilpotent of order degree_bound + 1
  TruncatedSeries u = *this;
  u.coeffs_[0] = 0;
  TruncatedSeries result = one(arity_, degree_bound_);
  TruncatedSeries u_power = one(arity_, degree_bound_);
  for (std::uint32_t m = 1; m <= degree_bound_; ++m) {
    u_power = u_power * u;
    const BigInt coefficient = binomial(k, m);
    if (coefficient.is_zero()) continue;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) result.coeffs_[i] += coefficient * u_power.coeffs_[i];
  }
  return result;
}

TruncatedSeries magnus_image(const Word& w, std::size_t arity, std::uint32_t degree_bound) {
  if (w.arity() > arity) throw Error(Errc::InvalidArgument, "word arity exceeds series arity");
  TruncatedSeries acc = TruncatedSeries::one(arity, degree_bound);
  for (const auto& s : w.syllables()) {
    acc = acc * TruncatedSeries::generator(arity, degree_bound, s.var).power(s.exponent);
  }
  return acc;
}

TruncatedSeries magnus_image(const FormalCommutator& alpha, std::size_t arity, std::uint32_t degree_bound) {
  if (alpha.is_leaf()) return TruncatedSeries::generator(arity, degree_bound, alpha.leaf_index());
  const TruncatedSeries a = magnus_image(alpha.left(), arity, degree_bound);
  const TruncatedSeries b = magnus_image(alpha.right(), arity, degree_bound);
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace wordmaps
