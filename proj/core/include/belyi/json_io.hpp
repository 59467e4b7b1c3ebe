#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "belyi/character_table.hpp"
#include "belyi/cohomology.hpp"
#include "belyi/cover.hpp"
#include "belyi/descent.hpp"
#include "belyi/perm_group.hpp"

namespace belyi {

using Json = nlohmann::ordered_json;

// Parses text; malformed input raises PreconditionError with line and column.
Json parse_json_text(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

// [2,3,1] sends 1 -> 2, 2 -> 3, 3 -> 1.
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j, int degree = -1);

// {"degree": n, "generators": [[...], ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

// {"degree": n, "x": [...], "y": [...]}; z is never read.
Json cover_to_json(const BelyiCover& c);
BelyiCover cover_from_json(const Json& j);

Json cyclotomic_to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const Json& j);
Json character_table_to_json(const CharacterTable& t);

// {"group": <group>, "shape": [...], "action": [matrix per element]}; the
// element order is that of the permutation group.  "generator_action" may
// replace "action".
Json module_to_json(const PermGroup& g, const FiniteHModule& m);
struct ParsedModule {
  PermGroup group;
  FiniteHModule module;
};
ParsedModule module_from_json(const Json& j);

// {"table": [[m(h1,h2) for h2] for h1]}
Json cocycle_to_json(const Cocycle2& beta);
Cocycle2 cocycle_from_json(const FiniteHModule& m, const Json& j);

Json descent_report_to_json(const DescentReport& r);
DescentReport descent_report_from_json(const Json& j);

std::string dump(const Json& j);

}  // namespace belyi
