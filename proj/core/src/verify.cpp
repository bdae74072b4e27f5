#include "wordmaps/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "wordmaps/admissible.hpp"
#include "wordmaps/builtins.hpp"
#include "wordmaps/error.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/invariants.hpp"
#include "wordmaps/normal_form.hpp"
#include "wordmaps/word_map.hpp"

namespace wordmaps {

namespace {

// Plain modulo keeps the draws identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Element random_element(std::mt19937_64& rng, const FiniteGroup& g) {
  return static_cast<Element>(draw(rng, g.order()));
}

std::vector<Element> random_tuple(std::mt19937_64& rng, const FiniteGroup& g, std::size_t d) {
  std::vector<Element> out(d);
  for (auto& x : out) x = random_element(rng, g);
  return out;
}

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void add(std::string name, bool passed, std::string detail) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  template <typename F>
  void run(const std::string& name, F&& body) {
    try {
      std::string detail;
      const bool ok = body(detail);
      add(name, ok, detail);
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  VerifyReport& report_;
};

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

bool profile_laws(const FiniteGroup& g, std::string& detail) {
  const auto nil = nilpotency_class(g);
  const std::size_t depth = nil.nilpotency_class ? *nil.nilpotency_class + 1 : 6;
  const auto prof = exp_profile(g, std::max<std::size_t>(depth, 1));
  detail = "exp profile " + join(prof.values);
  if (prof.at(1) != g.exponent()) return false;
  for (std::size_t r = 1; r < prof.values.size(); ++r)
    if (prof.values[r - 1] % prof.values[r] != 0) return false;
  if (nil.nilpotency_class) {
    const std::size_t c = *nil.nilpotency_class;
    detail += "; class " + std::to_string(c);
    if (c > 0 && prof.at(c) < 2) return false;
    if (prof.at(c + 1) != 1) return false;
  } else {
    detail += "; not nilpotent";
    if (prof.values.back() < 2) return false;
  }
  return true;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

Word random_word(std::mt19937_64& rng, std::size_t arity, std::size_t syllables, std::int64_t max_exponent) {
  const std::size_t n = static_cast<std::size_t>(draw(rng, syllables + 1));
  std::vector<Syllable> raw;
  raw.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto var = static_cast<std::uint32_t>(draw(rng, arity) + 1);
    std::int64_t e = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(max_exponent))) + 1;
    if (draw(rng, 2) == 0) e = -e;
    raw.push_back({var, e});
  }
  return Word::reduce(raw, arity);
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  Suite suite(report);
  std::mt19937_64 rng(options.seed);

  for (const auto& spec : builtin_library_specs()) {
    suite.run("exp_profile_laws " + spec, [&](std::string& detail) { return profile_laws(builtin_group(spec), detail); });
  }

  for (std::size_t k = 3; k <= 4; ++k) {
    for (std::uint32_t p : {2U, 3U}) {
      if (k == 4 && p == 3) continue;
      const std::string name = "unitriangular_class UT(" + std::to_string(k) + "," + std::to_string(p) + ")";
      suite.run(name, [&](std::string& detail) {
        const auto nil = nilpotency_class(unitriangular_group(k, p));
        detail = nil.nilpotency_class ? "class " + std::to_string(*nil.nilpotency_class) : "not nilpotent";
        return nil.nilpotency_class == k - 1;
      });
    }
  }

  suite.run("word_evaluation_homomorphism S4", [&](std::string& detail) {
    const auto g = symmetric_group(4);
    for (unsigned s = 0; s < options.samples; ++s) {
      const Word u = random_word(rng, 3, 8, 4), v = random_word(rng, 3, 8, 4);
      const auto args = random_tuple(rng, g, 3);
      const Element eu = evaluate(u, g, args), ev = evaluate(v, g, args);
      if (evaluate(concat(u, v), g, args) != g.mul(eu, ev) || evaluate(invert(u), g, args) != g.inv(eu)) {
        detail = "failed on " + to_string(u) + " / " + to_string(v);
        return false;
      }
    }
    detail = std::to_string(options.samples) + " samples";
    return true;
  });

  suite.run("nested_commutator_word D8", [&](std::string& detail) {
    const auto g = dihedral_group(8);
    const std::vector<std::uint32_t> idx{1, 2, 3, 4};
    const Word w = nested_commutator_word(idx, 4);
    for (unsigned s = 0; s < options.samples; ++s) {
      const auto args = random_tuple(rng, g, 4);
      if (evaluate(w, g, args) != nested_commutator(g, args)) return false;
    }
    detail = to_string(w);
    return true;
  });

  for (const char* spec : {"symmetric:3", "quaternion:8"}) {
    suite.run(std::string("admissible_distinct ") + spec + " d=2", [&](std::string& detail) {
      const auto g = builtin_group(spec);
      const auto fs = enumerate_admissible(g, 2);
      std::vector<std::vector<Element>> tables;
      tables.reserve(fs.size());
      for (const auto& f : fs) tables.push_back(word_map_table(build_admissible_word(f), g, 2).values());
      std::size_t witnessed = 0;
      for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
          if (tables[a] == tables[b]) {
            detail = "equal tables at " + std::to_string(a) + "," + std::to_string(b);
            return false;
          }
          const auto args = distinctness_witness(fs[a], fs[b], g);
          if (tables[a][encode_arguments(g, args)] == tables[b][encode_arguments(g, args)]) return false;
          ++witnessed;
        }
      }
      detail = std::to_string(fs.size()) + " functions, " + std::to_string(witnessed) + " witnessed pairs";
      return true;
    });
  }

  for (const char* spec : {"symmetric:3", "quaternion:8", "dihedral:4"}) {
    suite.run(std::string("omega_sandwich ") + spec + " d=2", [&](std::string& detail) {
      const auto g = builtin_group(spec);
      const auto r = omega_report(g, 2, options.limits);
      if (!r.exact) {
        detail = "closure incomplete: " + r.closure_status;
        return false;
      }
      detail = "lower " + to_string(r.lower) + " exact " + to_string(*r.exact);
      bool ok = r.lower <= *r.exact;
      if (r.upper) {
        detail += " upper " + to_string(*r.upper);
        ok = ok && *r.exact <= *r.upper && *r.upper <= *r.upper_formal;
      }
      return ok;
    });
  }

  for (const char* spec : {"cyclic:2", "cyclic:6", "cyclic:2xcyclic:4"}) {
    suite.run(std::string("abelian_exact ") + spec, [&](std::string& detail) {
      const auto g = builtin_group(spec);
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto r = omega_exact(g, d, options.limits);
        if (!r.complete() || BigInt(r.count) != abelian_omega(g, d)) {
          detail = "mismatch at d=" + std::to_string(d);
          return false;
        }
      }
      detail = "d<=3";
      return true;
    });
  }

  suite.run("formal_commutator_counts", [&](std::string& detail) {
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::uint32_t c = 1; c <= 5; ++c)
        if (count_formal_commutators(d, c) != formal_commutator_polynomial(d, c)) {
          detail = "d=" + std::to_string(d) + " c=" + std::to_string(c);
          return false;
        }
    detail = "d<=4, c<=5";
    return true;
  });

  suite.run("formal_commutator_degree", [&](std::string& detail) {
    for (std::uint32_t c = 1; c <= 5; ++c) {
      std::vector<BigInt> diff;
      for (std::size_t d = 0; d <= c + 2; ++d) diff.push_back(formal_commutator_polynomial(d, c));
      for (std::uint32_t k = 1; k <= c + 1; ++k) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        if (k == c && (diff[0] == 0 || diff[0] != diff[1])) return false;
        if (k == c + 1 && diff[0] != 0) return false;
      }
    }
    detail = "c<=5";
    return true;
  });

  suite.run("hall_basis_witt", [&](std::string& detail) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto basis = hall_basis(d, 4);
      for (std::uint32_t w = 1; w <= 4; ++w)
        if (BigInt(basis.count_of_weight(w)) != witt_count(d, w)) return false;
      for (std::uint32_t c = 1; c <= 4; ++c)
        if (BigInt(hall_basis(d, c).size()) > formal_commutator_polynomial(d, c)) return false;
    }
    detail = "d<=3, w<=4";
    return true;
  });

  for (std::uint32_t c = 1; c <= 3; ++c) {
    for (std::uint32_t p : {2U, 3U}) {
      const std::string name = "normal_form_soundness c=" + std::to_string(c) + " UT(" + std::to_string(c + 1) + "," +
                               std::to_string(p) + ")";
      suite.run(name, [&](std::string& detail) {
        const auto g = unitriangular_group(c + 1, p);
        for (std::size_t d = 1; d <= 3; ++d) {
          for (unsigned s = 0; s < options.samples; ++s) {
            const Word w = random_word(rng, d, 30, 3);
            const Word nf = normal_form_to_word(normal_form(w, d, c));
            for (unsigned t = 0; t < 5; ++t) {
              const auto args = random_tuple(rng, g, d);
              if (evaluate(w, g, args) != evaluate(nf, g, args)) {
                detail = "d=" + std::to_string(d) + " word " + to_string(w);
                return false;
              }
            }
          }
        }
        detail = std::to_string(3 * options.samples) + " words";
        return true;
      });
    }
  }

  suite.run("normal_form_round_trip", [&](std::string& detail) {
    for (std::size_t d = 2; d <= 3; ++d) {
      for (std::uint32_t c = 1; c <= 3; ++c) {
        const auto fn = free_nilpotent_group(d, c);
        for (unsigned s = 0; s < options.samples; ++s) {
          NormalForm nf = fn->identity();
          for (auto& e : nf.exponents) e = static_cast<std::int64_t>(draw(rng, 11)) - 5;
          const NormalForm back = fn->normal_form(fn->to_word(nf));
          if (!(back == nf) || !(fn->from_series(fn->to_series(nf)) == nf)) {
            detail = "d=" + std::to_string(d) + " c=" + std::to_string(c);
            return false;
          }
        }
      }
    }
    detail = std::to_string(6 * options.samples) + " exponent vectors";
    return true;
  });

  suite.run("closure_worker_independence", [&](std::string& detail) {
    for (const char* spec : {"symmetric:3", "quaternion:8"}) {
      const auto g = builtin_group(spec);
      ClosureLimits one = options.limits, four = options.limits;
      one.workers = 1;
      four.workers = 4;
      const auto a = word_map_closure(g, 2, one), b = word_map_closure(g, 2, four);
      if (a.tables != b.tables || a.result.count != b.result.count) {
        detail = spec;
        return false;
      }
    }
    detail = "S3, Q8 at d=2";
    return true;
  });

  return report;
}

std::string to_json(const VerifyReport& report, int indent) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  nlohmann::json j;
  j["seed"] = report.seed;
  j["checks"] = std::move(checks);
  j["failures"] = report.failures();
  j["all_passed"] = report.failures() == 0;
  return j.dump(indent);
}

std::string to_csv(const VerifyReport& report) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "name,passed,detail\n";
  for (const auto& c : report.checks) os << quote(c.name) << ',' << (c.passed ? "true" : "false") << ',' << quote(c.detail) << '\n';
  return os.str();
}

}  // namespace wordmaps
