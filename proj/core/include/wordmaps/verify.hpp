#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wordmaps/omega.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

struct VerifyOptions {
  std::uint64_t seed = 0;
  ClosureLimits limits{};
  /// Random samples per sampled property.
  unsigned samples = 20;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
};

/// Runs the desk-scale property suite. Output depends only on the options.
VerifyReport run_verify(const VerifyOptions& options);

std::string to_json(const VerifyReport& report, int indent = 2);
/// Columns: name,passed,detail
std::string to_csv(const VerifyReport& report);

/// A random reduced word on x_1..x_arity with up to `syllables` syllables and
/// exponents in [-max_exponent, max_exponent].
Word random_word(std::mt19937_64& rng, std::size_t arity, std::size_t syllables, std::int64_t max_exponent);

}  // namespace wordmaps
