#pragma once

#include <string>
#include <string_view>

#include "idlogic/core/structure.hpp"
#include "json.hpp"

namespace idlogic {

/// Reads a structure document:
///
///   { "domain":    ["0", "1", "2"],
///     "functions": { "s": ["1", "2", "2"], "0": "0", "f": {"0,1": "2", ...} },
///     "relations": { "E": [["0"], ["2"]], "G": ["0"], "P": [[]] } }
///
/// Function tables are nested arrays in row-major order, objects keyed by
/// comma-joined arguments, or a single element for constants. A relation is a
/// list of tuples; a bare element stands for a 1-tuple; `[[]]` is a true
/// proposition and `[]` an empty relation. Arities come from `vocab` when it
/// declares the symbol and are inferred otherwise. Numbers are accepted as
/// element names. Throws SyntaxError for malformed documents and
/// ArityMismatch / ElementOutOfDomain for values that do not fit.
Structure structure_from_json(const nlohmann::json& doc, const Vocabulary& vocab);
Structure parse_structure(std::string_view text, const Vocabulary& vocab);

nlohmann::json structure_to_json(const Structure& s);

}  // namespace idlogic
