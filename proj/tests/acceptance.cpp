// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordmaps/admissible.hpp"
#include "wordmaps/builtins.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/invariants.hpp"
#include "wordmaps/normal_form.hpp"
#include "wordmaps/omega.hpp"
#include "wordmaps/verify.hpp"
#include "wordmaps/word_map.hpp"

using namespace wordmaps;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void guarded(int id, const char* title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, title, ok, detail);
}

std::string timing(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Upper unitriangular (c+1)x(c+1) matrices over Z/p, computed directly.
struct UnitriangularMod {
  std::size_t n;
  std::uint32_t p;
  using Mat = std::vector<std::uint32_t>;

  Mat identity() const {
    Mat m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k)
        for (std::size_t j = k; j < n; ++j) m[i * n + j] = (m[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
    return m;
  }
  Mat inverse(const Mat& a) const {
    // (I + N)^{-1} = sum_k (-N)^k, N nilpotent
    Mat neg(n * n, 0);
    for (std::size_t i = 0; i < n * n; ++i) neg[i] = (p - a[i] % p) % p;
    for (std::size_t i = 0; i < n; ++i) neg[i * n + i] = 0;
    Mat term = identity(), sum = identity();
    for (std::size_t k = 1; k < n; ++k) {
      term = mul(term, neg);
      for (std::size_t i = 0; i < n * n; ++i) sum[i] = (sum[i] + term[i]) % p;
    }
    return sum;
  }
  Mat power(const Mat& a, std::int64_t e) const {
    Mat base = e < 0 ? inverse(a) : a;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Mat acc = identity();
    while (k) {
      if (k & 1U) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return acc;
  }
  Mat random(std::mt19937_64& rng) const {
    Mat m = identity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = static_cast<std::uint32_t>(rng() % p);
    return m;
  }
  Mat elementary(std::size_t i, std::size_t j) const {
    Mat m = identity();
    m[i * n + j] = 1;
    return m;
  }
  Mat commutator(const Mat& a, const Mat& b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  Mat eval(const Word& w, const std::vector<Mat>& args) const {
    return evaluate_with<Mat>(
        w, args, identity(), [&](const Mat& x, const Mat& y) { return mul(x, y); },
        [&](const Mat& x, std::int64_t e) { return power(x, e); });
  }
};

// Class exactly c: the c-fold commutator of the superdiagonal elementary
// matrices is nontrivial, and every (c+1)-fold commutator of random elements
// vanishes (forced for (c+1)x(c+1) unitriangular matrices; sampled here).
bool unitriangular_class_is(const UnitriangularMod& u, std::uint32_t c, std::mt19937_64& rng) {
  auto acc = u.elementary(0, 1);
  for (std::size_t k = 1; k < c; ++k) acc = u.commutator(acc, u.elementary(k, k + 1));
  if (acc == u.identity()) return false;
  for (int t = 0; t < 50; ++t) {
    auto x = u.random(rng);
    for (std::uint32_t k = 0; k < c; ++k) x = u.commutator(x, u.random(rng));
    if (x != u.identity()) return false;
  }
  return true;
}

}  // namespace

int main() {
  guarded(1, "abelian exactness", [](std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:6", "cyclic:2xcyclic:4"}) {
      const auto g = builtin_group(spec);
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto r = omega_exact(g, d);
        const BigInt expect = pow(BigInt(g.exponent()), d);
        if (!r.complete() || BigInt(r.count) != expect) {
          ok = false;
          detail += std::string(spec) + " d=" + std::to_string(d) + " got " + std::to_string(r.count) +
                    " want " + to_string(expect) + "; ";
        }
      }
    }
    const double s = seconds_since(t0);
    detail += "4 groups x d<=3 in " + timing(s) + " (limit 60s)";
    return ok && s < 60.0;
  });

  guarded(2, "admissible words exhaustively distinct", [](std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (auto [spec, want] : {std::pair{"symmetric:3", 108}, std::pair{"quaternion:8", 32}}) {
      const auto g = builtin_group(spec);
      const auto fs = enumerate_admissible(g, 2);
      const BigInt derived = admissible_count(exp_profile(g, 2), 2);
      std::vector<std::vector<Element>> tables;
      for (const auto& f : fs) tables.push_back(word_map_table(build_admissible_word(f), g, 2).values());
      const std::set<std::vector<Element>> distinct(tables.begin(), tables.end());
      std::size_t witnessed = 0, pairs = 0;
      for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
          ++pairs;
          const auto args = distinctness_witness(fs[a], fs[b], g);
          const auto at = encode_arguments(g, args);
          if (tables[a][at] != tables[b][at]) ++witnessed;
        }
      const bool this_ok = fs.size() == static_cast<std::size_t>(want) && derived == want &&
                           distinct.size() == fs.size() && witnessed == pairs;
      ok = ok && this_ok;
      detail += std::string(spec) + ": " + std::to_string(fs.size()) + " functions, " +
                std::to_string(distinct.size()) + " distinct tables, " + std::to_string(witnessed) + "/" +
                std::to_string(pairs) + " witnesses; ";
    }
    const double s = seconds_since(t0);
    detail += timing(s) + " (limit 300s)";
    return ok && s < 300.0;
  });

  guarded(3, "lower bound and sandwich", [](std::string& detail) {
    ClosureLimits limits;
    limits.closure_cap = 1'000'000;
    const auto s3 = symmetric_group(3);
    const auto q8 = quaternion_group();
    const BigInt s3_lower = omega_lower(s3, 2), q8_lower = omega_lower(q8, 2);
    const auto s3_exact = omega_exact(s3, 2, limits), q8_exact = omega_exact(q8, 2, limits);
    const BigInt q8_upper = omega_upper_nilpotent(q8, 2).bound;
    detail = "S3: " + to_string(s3_lower) + " <= " + std::to_string(s3_exact.count) + "; Q8: " + to_string(q8_lower) +
             " <= " + std::to_string(q8_exact.count) + " <= " + to_string(q8_upper);
    return s3_lower == 108 && s3_exact.complete() && s3_lower <= s3_exact.count && q8_lower == 32 &&
           q8_exact.complete() && q8_lower <= q8_exact.count && BigInt(q8_exact.count) <= q8_upper && q8_upper == 64;
  });

  guarded(4, "non-nilpotent growth at small d", [](std::string& detail) {
    const auto s3 = symmetric_group(3);
    bool ok = true;
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto r = omega_exact(s3, d);
      const std::size_t bits = (std::size_t{1} << d) - 1;
      const bool holds = r.complete() && BigInt(r.count) >= pow(BigInt(2), bits);
      ok = ok && holds;
      detail += "d=" + std::to_string(d) + ": log2 " + log2_decimal(BigInt(r.count)) + " >= " + std::to_string(bits) + "; ";
    }
    ClosureLimits limits;
    limits.closure_cap = 1'000'000;
    const auto r3 = omega_exact(s3, 3, limits);
    const bool d3 = r3.count > 128;
    detail += "d=3: " + std::string(to_string(r3.status)) + " with " + std::to_string(r3.count) + " maps, log2 " +
              log2_decimal(BigInt(r3.count)) + " > 7";
    return ok && d3;
  });

  guarded(5, "formal commutator counts", [](std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::uint32_t c = 1; c <= 5; ++c)
        if (count_formal_commutators(d, c) != formal_commutator_polynomial(d, c)) {
          ok = false;
          detail += "mismatch d=" + std::to_string(d) + " c=" + std::to_string(c) + "; ";
        }
    // degree in d is exactly c: differences of enumerated counts over d = 1..c+3
    for (std::uint32_t c = 1; c <= 5; ++c) {
      std::vector<BigInt> diff;
      for (std::size_t d = 1; d <= c + 3; ++d) diff.push_back(count_formal_commutators(d, c));
      for (std::uint32_t k = 1; k <= c + 1; ++k) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        const bool constant = std::all_of(diff.begin(), diff.end(), [&](const BigInt& x) { return x == diff[0]; });
        if (k == c && (!constant || diff[0] == 0)) ok = false;
        if (k == c + 1 && (!constant || diff[0] != 0)) ok = false;
      }
    }
    const double s = seconds_since(t0);
    detail += "d<=4, c<=5 match; degree exactly c for c<=5; " + timing(s) + " (limit 10s)";
    return ok && s < 10.0;
  });

  guarded(6, "Hall basis sizes", [](std::string& detail) {
    bool ok = hall_basis(2, 2).size() == 3 && hall_basis(2, 3).size() == 5;
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto b = hall_basis(d, 4);
      for (std::uint32_t w = 1; w <= 4; ++w) ok = ok && BigInt(b.count_of_weight(w)) == witt_count(d, w);
      for (std::uint32_t c = 1; c <= 4; ++c) ok = ok && BigInt(hall_basis(d, c).size()) <= formal_commutator_polynomial(d, c);
    }
    detail = "per-weight counts = Witt for d<=3, w<=4; N_{2,2}=" + std::to_string(hall_basis(2, 2).size()) +
             ", N_{2,3}=" + std::to_string(hall_basis(2, 3).size()) + "; N <= P_c(d)";
    return ok;
  });

  guarded(7, "normal-form soundness", [](std::string& detail) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    bool ok = true;
    for (std::uint32_t c = 1; c <= 3; ++c)
      for (std::uint32_t p : {2U, 3U, 5U}) {
        UnitriangularMod u{c + 1, p};
        if (!unitriangular_class_is(u, c, rng)) {
          ok = false;
          detail += "UT(" + std::to_string(c + 1) + "," + std::to_string(p) + ") class check failed; ";
        }
        if (p != 5 && nilpotency_class(unitriangular_group(c + 1, p)).nilpotency_class != c) ok = false;
      }
    std::size_t words = 0, evaluations = 0, mismatches = 0;
    for (int k = 0; k < 200; ++k) {
      const std::size_t d = 1 + k % 3;
      const std::uint32_t c = 1 + static_cast<std::uint32_t>((k / 3) % 3);
      const Word w = random_word(rng, d, 30, 5);
      const Word nf = normal_form_to_word(normal_form(w, d, c));
      ++words;
      for (std::uint32_t p : {2U, 3U, 5U}) {
        UnitriangularMod u{c + 1, p};
        for (int t = 0; t < 50; ++t) {
          std::vector<UnitriangularMod::Mat> args;
          for (std::size_t i = 0; i < d; ++i) args.push_back(u.random(rng));
          ++evaluations;
          if (u.eval(w, args) != u.eval(nf, args)) ++mismatches;
        }
      }
    }
    std::size_t round_trips = 0;
    for (int k = 0; k < 100; ++k) {
      const std::size_t d = 1 + k % 3;
      const std::uint32_t c = 1 + static_cast<std::uint32_t>((k / 3) % 3);
      auto fn = free_nilpotent_group(d, c);
      NormalForm v = fn->identity();
      for (auto& e : v.exponents) e = static_cast<std::int64_t>(rng() % 11) - 5;
      if (normal_form(normal_form_to_word(v), d, c) == v) ++round_trips;
    }
    const double s = seconds_since(t0);
    detail += std::to_string(words) + " words, " + std::to_string(evaluations) + " evaluations, " +
              std::to_string(mismatches) + " mismatches; " + std::to_string(round_trips) + "/100 round trips; " +
              timing(s) + " (limit 300s)";
    return ok && mismatches == 0 && round_trips == 100 && s < 300.0;
  });

  guarded(8, "exp profile laws", [](std::string& detail) {
    bool ok = true;
    for (const auto& spec : builtin_library_specs()) {
      const auto g = builtin_group(spec);
      const auto nil = nilpotency_class(g);
      const std::size_t depth = nil.nilpotency_class ? *nil.nilpotency_class + 1 : 6;
      const auto prof = exp_profile(g, std::max<std::size_t>(depth, 2));
      bool good = prof.at(1) == g.exponent();
      for (std::size_t r = 1; r < prof.values.size(); ++r) good = good && prof.values[r - 1] % prof.values[r] == 0;
      if (nil.nilpotency_class) {
        const std::size_t c = *nil.nilpotency_class;
        if (c > 0) good = good && prof.at(c) >= 2;
        good = good && prof.at(c + 1) == 1;
      }
      if (!good) detail += spec + " violates; ";
      ok = ok && good;
    }
    detail += std::to_string(builtin_library_specs().size()) + " builtin groups";
    return ok;
  });

  guarded(9, "determinism", [](std::string& detail) {
    VerifyOptions opts;
    opts.seed = 42;
    const std::string a = to_json(run_verify(opts)), b = to_json(run_verify(opts));
    bool ok = a == b;
    detail = ok ? "verify reports identical; " : "verify reports differ; ";
    ClosureLimits one, four;
    four.workers = 4;
    for (auto [spec, d] : {std::pair{"symmetric:3", 2}, std::pair{"quaternion:8", 3}, std::pair{"cyclic:2xcyclic:4", 3}}) {
      const auto g = builtin_group(spec);
      const auto x = omega_exact(g, d, one), y = omega_exact(g, d, four);
      const bool same = x.count == y.count && x.status == y.status;
      ok = ok && same;
      detail += std::string(spec) + " d=" + std::to_string(d) + ": " + std::to_string(x.count) + (same ? " == " : " != ") +
                std::to_string(y.count) + "; ";
    }
    return ok;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
