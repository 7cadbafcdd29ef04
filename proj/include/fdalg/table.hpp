// Integer tables with labeled rows/columns and deterministic rendering to
// markdown, CSV and JSON.

#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace fdalg {

struct Table {
    std::string title;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<long>> values; // rows x cols
};

std::string render_markdown(const Table& t);
std::string render_csv(const Table& t);
nlohmann::ordered_json table_to_json(const Table& t);
Table table_from_json(const nlohmann::ordered_json& j);

std::string render_table(const Table& t, const std::string& format); // md|csv|json

} // namespace fdalg
