#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "reid/abelian.hpp"
#include "reid/group.hpp"
#include "reid/morphism.hpp"
#include "reid/quasicyclic.hpp"

namespace reid {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const BigInt& n);
/// "INFINITE" or an integer.
Json to_json(const Count& c);
Json to_json(const AbelianShape& s);

/// Parses a file or throws Error(SpecParseError).
Json load_json_file(const std::string& path);

/// A cycle string "(0 1 2)(3 4)" or an image array [1, 2, 0, 4, 3].
Perm perm_from_json(const Json& j, std::size_t degree);

IntMatrix matrix_from_json(const Json& j, std::size_t expected_cols);

/// A group description. Accepted forms:
///   {"name": "cyclic", "args": [6]} for the named constructors,
///   {"name": "direct_product", "factors": [g1, g2, ...]},
///   {"name": "perm", "degree": n, "generators": [...]}, or {"kind": "perm", ...}.
/// Unknown names throw Error(ConfigError); malformed input throws SpecParseError.
GroupPtr group_from_json(const Json& j, const GroupOptions& options = {});

/// {"images": [perm per generator]}, {"map": [element id per id]},
/// {"inner": perm} or the string "identity".
Automorphism automorphism_from_json(const GroupPtr& g, const Json& j);

/// {"ambient_rank": k, "relations": [[...] per relation], "matrix": [[...] per row]}.
LatticeAbelianEndo abelian_from_json(const Json& j);

/// {"p": p, "d": d, "matrix": [[...]]}, optionally wrapped as {"prufer": {...}}.
QuasicyclicEndo prufer_from_json(const Json& j);

/// {"generators": [{"numerators": [...], "level": k}, ...]} or {"image": [[...] per row]}.
QuasicyclicSubgroup quasicyclic_subgroup_from_json(const Json& j, std::size_t d);

}  // namespace reid
