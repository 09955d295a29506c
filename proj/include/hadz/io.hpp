#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hadz/coboundary_set.hpp"
#include "hadz/diagram.hpp"
#include "hadz/hadamard.hpp"
#include "hadz/orbit.hpp"
#include "hadz/search.hpp"
#include "hadz/sign_matrix.hpp"

namespace hadz {

using json = nlohmann::json;

// "14,10,6" -> sorted index vector (validation happens in CoboundarySet).
std::vector<int> parse_index_list(std::string_view text);

// {"t": 7, "coboundaries": [...]}
json set_to_json(const CoboundarySet& s);
CoboundarySet set_from_json(const json& j);

// Class-grouped display "{ { 14, 10, 6 }, { 11 }, ... }" in class order
// 2,3,4,1, ascending inside each class.
std::string paper_style(const CoboundarySet& s);
// "4,6,9,..." ascending machine form.
std::string machine_style(const CoboundarySet& s);

// {"t": 7, "marks": [[...4 rows of t booleans...]]}
json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

// '+'/'-' grid, one row per line.
std::string matrix_grid(const SignMatrix& m);
// {"n": 12, "rows": [ints]} with packed bit rows (row-major, 1 = negative).
json matrix_packed_json(const SignMatrix& m);

json row_stats_to_json(const RowStats& rs);
json orbit_to_json(const OrbitRecord& rec, GroupParams p, bool include_members);
json search_report_to_json(const SearchReport& rep, bool include_hits);

} // namespace hadz
