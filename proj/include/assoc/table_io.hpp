#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "assoc/table.hpp"

namespace assoc {

// CSV long format: header "var1,var2,...,count" (non-negative integers) or
// "...,prob" (non-negative reals); one row per cell, missing cells are zero.
// Levels are collected from the rows; when every label of a variable parses
// as a number the levels are ordered numerically, otherwise by first
// appearance. Scores default to level indices.
ProbTable read_table_csv(std::istream& in);
ProbTable read_table_csv_file(const std::string& path);
void write_table_csv(const ProbTable& p, std::ostream& out);

// JSON tensor format:
//   { "vars": [...], "levels": {var: [labels]},
//     "scores": {var: [reals]} (optional), "probs": [row-major flat] }
nlohmann::json table_to_json(const ProbTable& p);
ProbTable table_from_json(const nlohmann::json& j);
ProbTable read_table_json_file(const std::string& path);

// Conditional family:
//   { "target": {"vars": [...], "levels": {...}, "scores": {...}},
//     "given":  {...}, "tables": [[...], ...] }
nlohmann::json family_to_json(const CondFamily& f);
CondFamily family_from_json(const nlohmann::json& j);

}  // namespace assoc
