#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace su11 {

// Shortest decimal that reads back to the same double; locale-independent.
// Non-finite values print as nan, inf, -inf.
std::string shortest(double v);

// JSON text with numbers in shortest round-trip form and non-finite numbers as
// null. indent < 0 gives a single line.
std::string dump_json(const nlohmann::json& j, int indent = 2);

// Comma-separated table with a mandatory header row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

std::string dump_csv(const Table& t);

}  // namespace su11
