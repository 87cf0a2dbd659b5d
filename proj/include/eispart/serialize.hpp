#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "eispart/applications.hpp"

namespace eispart {

using json = nlohmann::json;

// All exact values cross process boundaries as strings ("5", "-3/4") so that
// nothing is ever rounded. Keys of divisor-indexed maps are decimal strings.

// {"1": "1/17", "2": "16/17"} -> exact values keyed by divisor
std::map<long, Rational> rational_map_from_json(const json& j);
// {"1": 2, "2": -1} -> integer exponents keyed by divisor
std::map<long, long> integer_map_from_json(const json& j);

json to_json(const QSeries& s);            // {"precision": T, "coeffs": [...]}
QSeries qseries_from_json(const json& j);

json to_json(const EisCombo& combo);       // {"level": N, "k": k, "coeffs": {...}}
EisCombo eis_combo_from_json(const json& j);

json to_json(const CuspConstants& c);      // {"level": N, "k": k, "values": {...}}
CuspConstants cusp_constants_from_json(const json& j);

json to_json(const CuspOrderTable& t);     // {"orders": {...}, "total": "..."}

json table_to_json(const std::vector<TableRow>& rows);
// Columns: n,brute_force,formula,cusp_coefficient,match
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace eispart
