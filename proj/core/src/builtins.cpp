#include "wordmaps/builtins.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wordmaps/error.hpp"

namespace wordmaps {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::size_t parse_count(std::string_view token, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw Error(Errc::ParseError, "bad number \"" + std::string(token) + "\" in group spec \"" +
                                      std::string(spec) + "\"");
  }
  return value;
}

FiniteGroup single_builtin(std::string_view factor, const GroupLimits& limits) {
  const auto parts = split(factor, ':');
  const std::string_view kind = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n) {
      throw Error(Errc::ParseError, "group spec \"" + std::string(factor) + "\" expects " +
                                        std::to_string(n - 1) + " parameter(s)");
    }
  };
  if (kind == "trivial") {
    want(1);
    return trivial_group();
  }
  if (kind == "cyclic") {
    want(2);
    return cyclic_group(parse_count(parts[1], factor), limits);
  }
  if (kind == "dihedral") {
    want(2);
    return dihedral_group(parse_count(parts[1], factor), limits);
  }
  if (kind == "symmetric") {
    want(2);
    const std::size_t n = parse_count(parts[1], factor);
    if (n > 6) throw Error(Errc::InvalidArgument, "builtin symmetric groups are limited to n <= 6");
    return symmetric_group(n, limits);
  }
  if (kind == "quaternion") {
    want(2);
    if (parse_count(parts[1], factor) != 8) throw Error(Errc::InvalidArgument, "only quaternion:8 is built in");
    return quaternion_group();
  }
  if (kind == "unitriangular") {
    want(3);
    const std::size_t p = parse_count(parts[2], factor);
    if (p > 0xFFFFFFFFULL) throw Error(Errc::InvalidArgument, "prime too large");
    return unitriangular_group(parse_count(parts[1], factor), static_cast<std::uint32_t>(p), limits);
  }
  throw Error(Errc::ParseError, "unknown group kind \"" + std::string(kind) + "\"");
}

}  // namespace

FiniteGroup builtin_group(std::string_view spec, const GroupLimits& limits) {
  const auto factors = split(spec, 'x');
  FiniteGroup result = single_builtin(factors[0], limits);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = direct_product(result, single_builtin(factors[i], limits), limits);
  }
  result.set_label(std::string(spec));
  return result;
}

FiniteGroup group_from_document(std::string_view text, const GroupLimits& limits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("group file: ") + e.what());
  }
  try {
    const std::string name = doc.value("name", std::string{});
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "table") {
      auto table = doc.at("table").get<std::vector<std::vector<std::size_t>>>();
      auto names = doc.value("element_names", std::vector<std::string>{});
      return FiniteGroup::from_multiplication_table(table, limits, name, std::move(names));
    }
    if (kind == "permutations") {
      std::vector<Permutation> gens;
      for (const auto& g : doc.at("generators")) gens.push_back(parse_cycles(g.get<std::string>()));
      return from_permutation_generators(gens, limits, name);
    }
    if (kind == "builtin") {
      FiniteGroup g = builtin_group(doc.at("builtin").get<std::string>(), limits);
      if (!name.empty()) g.set_label(name);
      return g;
    }
    throw Error(Errc::ParseError, "group file: unknown kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("group file: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::filesystem::path& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_document(buf.str(), limits);
}

FiniteGroup resolve_group_source(std::string_view source, const GroupLimits& limits) {
  constexpr std::string_view prefix = "builtin:";
  if (source.substr(0, prefix.size()) == prefix) return builtin_group(source.substr(prefix.size()), limits);
  return load_group_file(std::filesystem::path(std::string(source)), limits);
}

const std::vector<std::string>& builtin_library_specs() {
  static const std::vector<std::string> specs{
      "trivial",         "cyclic:2",        "cyclic:3",          "cyclic:4",           "cyclic:6",
      "cyclic:2xcyclic:4", "cyclic:2xcyclic:2xcyclic:2", "dihedral:3", "dihedral:4", "dihedral:5",
      "dihedral:8",      "symmetric:3",     "symmetric:4",       "quaternion:8",       "unitriangular:3:2",
      "unitriangular:3:3", "unitriangular:4:2", "quaternion:8xcyclic:3", "symmetric:3xcyclic:2",
  };
  return specs;
}

}  // namespace wordmaps
