#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "weakunits/expr.hpp"
#include "weakunits/model.hpp"

namespace weakunits {

using json = nlohmann::json;

json tables_to_json(const ModelTables& t);
ModelTables tables_from_json(const json& j);  // StructuralError on a malformed document
TwoCategoryModel model_from_json(const json& j);

// FNV-1a 64 over the canonical JSON of the tables, names excluded.
std::string model_hash(const ModelTables& t);

json expr_to_json(const Expr1& e);
json expr_to_json(const Expr2& e);
Expr1 expr1_from_json(const json& j);
Expr2 expr2_from_json(const json& j);

json read_json_file(const std::filesystem::path& p);
void write_json_file(const std::filesystem::path& p, const json& j);

}  // namespace weakunits
