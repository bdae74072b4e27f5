// wordmaps: command-line front end. Reports go to stdout, diagnostics to stderr.
//
// Exit status: 0 on success (cap-limited partial results included),
// 1 on usage or input errors, 2 on internal invariant violations.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wordmaps/admissible.hpp"
#include "wordmaps/builtins.hpp"
#include "wordmaps/error.hpp"
#include "wordmaps/formal_commutator.hpp"
#include "wordmaps/hall_basis.hpp"
#include "wordmaps/invariants.hpp"
#include "wordmaps/normal_form.hpp"
#include "wordmaps/omega.hpp"
#include "wordmaps/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace wordmaps;

struct Config {
  std::string group;
  std::size_t d = 2;
  std::uint32_t c = 2;
  std::size_t d_max = 3;
  std::string mode = "exact";
  std::size_t table_cap = kDefaultTableCap;
  std::size_t closure_cap = kDefaultClosureCap;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  unsigned workers = 1;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string word;
  std::uint32_t max_class = kDefaultMaxCollectionClass;
  bool enumerate = false;
  bool check_distinct = false;
};

ClosureLimits limits(const Config& cfg) { return {cfg.table_cap, cfg.closure_cap, cfg.workers}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string joined(const std::vector<T>& xs, const char* sep = ";") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const Config& cfg) {
  const FiniteGroup g = resolve_group_source(cfg.group);
  const Nilpotency nil = nilpotency_class(g);
  std::size_t depth = std::max<std::size_t>(cfg.d_max, 1);
  if (nil.nilpotency_class) depth = std::max(depth, *nil.nilpotency_class + 1);
  const ExpProfile prof = exp_profile(g, depth);
  std::vector<std::size_t> series;
  for (const auto& h : lower_central_series(g)) series.push_back(h.order());

  if (cfg.format == "csv") {
    std::cout << "group,order,exponent,abelian,nilpotent,nilpotency_class,lower_central_series,exp_profile\n"
              << csv_field(g.label()) << ',' << g.order() << ',' << g.exponent() << ','
              << (g.is_abelian() ? "true" : "false") << ',' << (nil.nilpotent ? "true" : "false") << ','
              << (nil.nilpotency_class ? std::to_string(*nil.nilpotency_class) : "") << ',' << joined(series) << ','
              << joined(prof.values) << '\n';
    return 0;
  }
  json j;
  j["group"] = g.label();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["abelian"] = g.is_abelian();
  j["nilpotent"] = nil.nilpotent;
  j["nilpotency_class"] = nil.nilpotency_class ? json(*nil.nilpotency_class) : json(nullptr);
  j["lower_central_series"] = series;
  j["exp_profile"] = prof.values;
  emit(j);
  return 0;
}

int cmd_omega(const Config& cfg) {
  const FiniteGroup g = resolve_group_source(cfg.group);
  if (cfg.mode == "profile") {
    const GrowthProfile profile = growth_profile(g, cfg.d_max, limits(cfg));
    if (cfg.format == "csv") {
      std::cout << to_csv(profile.reports);
    } else {
      std::cout << to_json(profile) << '\n';
    }
    return 0;
  }
  if (cfg.mode == "exact") {
    const OmegaReport r = omega_report(g, cfg.d, limits(cfg));
    if (cfg.format == "csv") {
      std::cout << to_csv({r});
    } else {
      std::cout << to_json(r) << '\n';
    }
    return 0;
  }
  if (cfg.mode == "lower") {
    const BigInt lower = omega_lower(g, cfg.d);
    const BigInt bits = log2_lower_binomial(g, cfg.d);
    if (cfg.format == "csv") {
      std::cout << "group,d,lower,log2_lower,log2_lower_binomial\n"
                << csv_field(g.label()) << ',' << cfg.d << ',' << lower << ',' << log2_decimal(lower) << ',' << bits
                << '\n';
      return 0;
    }
    emit({{"group", g.label()},
          {"d", cfg.d},
          {"lower", to_string(lower)},
          {"log2_lower", log2_decimal(lower)},
          {"log2_lower_binomial", to_string(bits)}});
    return 0;
  }
  // upper
  const NilpotentUpperBound ub = omega_upper_nilpotent(g, cfg.d);
  if (cfg.format == "csv") {
    std::cout << "group,d,nilpotency_class,basis_size,formal_count,upper,upper_formal\n"
              << csv_field(g.label()) << ',' << cfg.d << ',' << ub.nilpotency_class << ',' << ub.basis_size << ','
              << ub.formal_count << ',' << ub.bound << ',' << ub.formal_bound << '\n';
    return 0;
  }
  emit({{"group", g.label()},
        {"d", cfg.d},
        {"nilpotency_class", ub.nilpotency_class},
        {"basis_size", ub.basis_size},
        {"formal_count", to_string(ub.formal_count)},
        {"upper", to_string(ub.bound)},
        {"upper_formal", to_string(ub.formal_bound)}});
  return 0;
}

int cmd_admissible(const Config& cfg) {
  const FiniteGroup g = resolve_group_source(cfg.group);
  const ExpProfile prof = cfg.d > 0 ? exp_profile(g, cfg.d) : ExpProfile{};
  const BigInt count = admissible_count(prof, cfg.d);

  json j;
  j["group"] = g.label();
  j["d"] = cfg.d;
  j["exp_profile"] = prof.values;
  j["count"] = to_string(count);
  j["cap_hit"] = false;
  std::vector<AdmissibleFunction> fs;
  if (cfg.enumerate || cfg.check_distinct) {
    try {
      fs = enumerate_admissible(g, cfg.d, cfg.enumeration_cap);
    } catch (const Error& e) {
      if (e.code() != Errc::EnumerationCapExceeded) throw;
      j["cap_hit"] = true;
    }
  }
  const bool cap_hit = j["cap_hit"].get<bool>();
  if (cfg.enumerate && !cap_hit) {
    j["functions"] = json::array();
    for (const auto& f : fs) j["functions"].push_back({{"values", f.values()}, {"word", to_string(build_admissible_word(f))}});
  }
  if (cfg.check_distinct && !cap_hit) {
    std::vector<WordMapTable> tables;
    tables.reserve(fs.size());
    for (const auto& f : fs) tables.push_back(word_map_table(build_admissible_word(f), g, cfg.d, cfg.table_cap));
    std::size_t pairs = 0, equal = 0, witnessed = 0;
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        ++pairs;
        if (tables[a] == tables[b]) {
          ++equal;
          continue;
        }
        const auto args = distinctness_witness(fs[a], fs[b], g);
        if (tables[a].at(args) != tables[b].at(args)) ++witnessed;
      }
    }
    j["pairs"] = pairs;
    j["equal_pairs"] = equal;
    j["witnessed_pairs"] = witnessed;
    j["pairwise_distinct"] = equal == 0 && witnessed == pairs;
  }

  if (cfg.format == "csv") {
    if (j.contains("functions")) {
      std::cout << "index,values,word\n";
      for (std::size_t k = 0; k < fs.size(); ++k)
        std::cout << k << ',' << joined(fs[k].values()) << ',' << csv_field(to_string(build_admissible_word(fs[k]))) << '\n';
    } else {
      std::cout << "group,d,count,cap_hit,pairwise_distinct\n"
                << csv_field(g.label()) << ',' << cfg.d << ',' << count << ',' << (cap_hit ? "true" : "false") << ','
                << (j.contains("pairwise_distinct") ? (j["pairwise_distinct"].get<bool>() ? "true" : "false") : "")
                << '\n';
    }
    return 0;
  }
  emit(j);
  return 0;
}

int cmd_hall_basis(const Config& cfg) {
  const HallBasis basis = hall_basis(cfg.d, cfg.c);
  if (cfg.format == "csv") {
    std::cout << "index,weight,commutator\n";
    for (std::size_t j = 0; j < basis.size(); ++j)
      std::cout << j + 1 << ',' << basis.weight(j) << ',' << csv_field(basis[j].to_string()) << '\n';
    return 0;
  }
  json j;
  j["d"] = cfg.d;
  j["class"] = cfg.c;
  j["size"] = basis.size();
  j["entries"] = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k)
    j["entries"].push_back({{"index", k + 1}, {"weight", basis.weight(k)}, {"commutator", basis[k].to_string()}});
  j["by_weight"] = json::array();
  for (std::uint32_t w = 1; w <= cfg.c; ++w)
    j["by_weight"].push_back({{"weight", w}, {"count", basis.count_of_weight(w)}, {"witt", to_string(witt_count(cfg.d, w))}});
  emit(j);
  return 0;
}

int cmd_count_commutators(const Config& cfg) {
  struct Row {
    std::size_t d;
    std::uint32_t c;
    std::optional<BigInt> enumerated;
    BigInt polynomial;
  };
  std::vector<Row> rows;
  bool cap_hit = false;
  for (std::size_t d = 1; d <= cfg.d_max; ++d) {
    for (std::uint32_t c = 1; c <= cfg.c; ++c) {
      Row row{d, c, std::nullopt, formal_commutator_polynomial(d, c)};
      try {
        row.enumerated = count_formal_commutators(d, c);
      } catch (const Error& e) {
        if (e.code() != Errc::EnumerationCapExceeded) throw;
        cap_hit = true;
      }
      rows.push_back(std::move(row));
    }
  }
  if (cfg.format == "csv") {
    std::cout << "d,c,enumerated,polynomial\n";
    for (const auto& r : rows)
      std::cout << r.d << ',' << r.c << ',' << (r.enumerated ? to_string(*r.enumerated) : "") << ',' << r.polynomial
                << '\n';
    return 0;
  }
  json j;
  j["cap_hit"] = cap_hit;
  j["rows"] = json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"d", r.d},
                         {"c", r.c},
                         {"enumerated", r.enumerated ? json(to_string(*r.enumerated)) : json(nullptr)},
                         {"polynomial", to_string(r.polynomial)}});
  }
  emit(j);
  return 0;
}

int cmd_normal_form(const Config& cfg) {
  const Word w = parse_word(cfg.word, cfg.d);
  if (cfg.c > kDefaultMaxCollectionClass && cfg.max_class >= cfg.c)
    std::cerr << "warning: collection above class " << kDefaultMaxCollectionClass << " may be slow\n";
  const NormalForm nf = normal_form(w, cfg.d, cfg.c, cfg.max_class);
  const HallBasis& basis = *nf.basis;
  if (cfg.format == "csv") {
    std::cout << "index,weight,commutator,exponent\n";
    for (std::size_t j = 0; j < basis.size(); ++j)
      std::cout << j + 1 << ',' << basis.weight(j) << ',' << csv_field(basis[j].to_string()) << ',' << nf.exponents[j]
                << '\n';
    return 0;
  }
  json j;
  j["word"] = to_string(w);
  j["d"] = cfg.d;
  j["class"] = cfg.c;
  j["basis"] = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) j["basis"].push_back(basis[k].to_string());
  j["exponents"] = json::array();
  for (const auto& e : nf.exponents) j["exponents"].push_back(e.convert_to<std::int64_t>() == e ? json(e.convert_to<std::int64_t>()) : json(to_string(e)));
  j["normal_form_word"] = to_string(normal_form_to_word(nf));
  emit(j);
  return 0;
}

int cmd_verify(const Config& cfg) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.limits = limits(cfg);
  const VerifyReport report = run_verify(opts);
  if (cfg.format == "csv") {
    std::cout << to_csv(report);
  } else {
    std::cout << to_json(report) << '\n';
  }
  return report.failures() == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Word maps on finite groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for all subcommands");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "builtin:<spec> or path to a group JSON file")->required();
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--table-cap", cfg.table_cap, "Maximum word-map table length")->check(CLI::PositiveNumber);
    sub->add_option("--closure-cap", cfg.closure_cap, "Maximum number of word maps to collect")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "Closure worker threads")->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "Nilpotency class, lower central series, exp profile");
  add_group(classify);
  auto* classify_depth = classify->add_option("--d-max", cfg.d_max, "Minimum depth of the exp profile (default 6)");
  add_format(classify);

  auto* omega = app.add_subcommand("omega", "Count word maps: exact, lower, upper or growth profile");
  add_group(omega);
  omega->add_option("--d", cfg.d, "Number of variables");
  omega->add_option("--d-max", cfg.d_max, "Largest d for --mode profile")->check(CLI::PositiveNumber);
  omega->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "lower", "upper", "profile"}));
  add_caps(omega);
  add_format(omega);

  auto* admissible = app.add_subcommand("admissible", "Admissible functions and their words");
  add_group(admissible);
  admissible->add_option("--d", cfg.d, "Number of variables");
  admissible->add_flag("--enumerate", cfg.enumerate, "List every admissible function");
  admissible->add_flag("--verify", cfg.check_distinct, "Check the word maps are pairwise distinct");
  admissible->add_option("--enumeration-cap", cfg.enumeration_cap)->check(CLI::PositiveNumber);
  admissible->add_option("--table-cap", cfg.table_cap)->check(CLI::PositiveNumber);
  add_format(admissible);

  auto* hall = app.add_subcommand("hall-basis", "Basic commutators of weight <= class");
  hall->add_option("--d", cfg.d, "Number of generators")->required()->check(CLI::PositiveNumber);
  hall->add_option("--class", cfg.c, "Maximum weight")->required()->check(CLI::PositiveNumber);
  add_format(hall);

  auto* count = app.add_subcommand("count-commutators", "Formal commutator counts P_c(d)");
  auto* count_d = count->add_option("--d-max", cfg.d_max, "Largest d (default 4)")->check(CLI::PositiveNumber);
  auto* count_c = count->add_option("--class", cfg.c, "Largest weight bound (default 5)")->check(CLI::PositiveNumber);
  add_format(count);

  auto* nf = app.add_subcommand("normal-form", "Collected normal form in the free nilpotent group");
  nf->add_option("--d", cfg.d, "Number of generators")->required()->check(CLI::PositiveNumber);
  nf->add_option("--class", cfg.c, "Nilpotency class")->required()->check(CLI::PositiveNumber);
  nf->add_option("--word", cfg.word, "Word text, e.g. \"x1^2 [x1, x2]^-1\"")->required();
  nf->add_option("--max-class", cfg.max_class, "Raise the supported class limit");
  add_format(nf);

  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--seed", cfg.seed, "Random seed (default 0)");
  add_caps(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  // Options shared between subcommands take their per-command defaults here.
  if (*classify && classify_depth->count() == 0) cfg.d_max = 6;
  if (*count && count_d->count() == 0) cfg.d_max = 4;
  if (*count && count_c->count() == 0) cfg.c = 5;

  try {
    if (*classify) return cmd_classify(cfg);
    if (*omega) return cmd_omega(cfg);
    if (*admissible) return cmd_admissible(cfg);
    if (*hall) return cmd_hall_basis(cfg);
    if (*count) return cmd_count_commutators(cfg);
    if (*nf) return cmd_normal_form(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "wordmaps: " << e.what() << '\n';
    return e.code() == Errc::InternalInvariant ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "wordmaps: internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
