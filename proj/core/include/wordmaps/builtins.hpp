#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/finite_group.hpp"

namespace wordmaps {

/// Builds a group from a builtin spec:
///   cyclic:n | dihedral:n | symmetric:n (n <= 6) | quaternion:8 | unitriangular:k:p | trivial
/// joined by 'x' for direct products, e.g. "cyclic:2xcyclic:4".
FiniteGroup builtin_group(std::string_view spec, const GroupLimits& limits = {});

/// Group file document (JSON):
///   {"name": ..., "kind": "table",        "table": [[...], ...], "element_names": [...]?}
///   {"name": ..., "kind": "permutations", "generators": ["(1 2 3)(4 5)", ...]}
///   {"name": ..., "kind": "builtin",      "builtin": "cyclic:2xcyclic:4"}
FiniteGroup group_from_document(std::string_view text, const GroupLimits& limits = {});
FiniteGroup load_group_file(const std::filesystem::path& path, const GroupLimits& limits = {});

/// "builtin:<spec>" or a path to a group file.
FiniteGroup resolve_group_source(std::string_view source, const GroupLimits& limits = {});

/// Specs of the groups every invariant check sweeps over.
const std::vector<std::string>& builtin_library_specs();

}  // namespace wordmaps
