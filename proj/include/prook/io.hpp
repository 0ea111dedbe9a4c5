#pragma once

#include "prook/algebra.hpp"
#include "prook/characters.hpp"
#include "prook/diagram.hpp"
#include "prook/matrix.hpp"
#include "prook/representation.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace prook {

// Insertion-ordered JSON keeps emitted objects in documented key order.
using Json = nlohmann::ordered_json;

// {"n": 5, "top": [2,3,4], "bottom": [1,2,5]}, lists ascending.  Decoding
// rejects missing keys, unequal cardinalities, duplicates and out-of-range
// vertices with std::invalid_argument / std::out_of_range.
Json diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const Json& j);

// "5:1,2,5->2,3,4" (bottom list -> top list); "5:->" when edgeless.
std::string diagram_to_compact(const PlanarDiagram& d);
PlanarDiagram diagram_from_compact(std::string_view text);

// Accepts either encoding, sniffing on the leading '{'.
PlanarDiagram parse_diagram(std::string_view text);

// {"n": 2, "terms": [{"coeff": "-3/2", "diagram": {...}}, ...]} with the
// term list in canonical diagram order and reduced rational coefficients.
Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j);

// Dense row-major rational entry strings plus the module labels.
Json irrep_matrix_to_json(int n, int k, const RationalMatrix& m);

// Header row of ranks 0..n, then one row of character values per module.
std::string character_table_csv(const CharacterTable& t);
Json character_table_json(const CharacterTable& t);

std::string bratteli_dot(const BratteliGraph& g);
Json bratteli_json(const BratteliGraph& g);

Json multiplicities_json(const MultiplicityVector& v);

// Comma-separated 1-based vertex list, empty for the empty set; validated
// against {1..n}.
Mask set_from_string(int n, std::string_view text);

} // namespace prook
