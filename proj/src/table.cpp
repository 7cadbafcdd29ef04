#include "fdalg/table.hpp"

#include <sstream>
#include <stdexcept>

namespace fdalg {

namespace {

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_markdown(const Table& t) {
    std::ostringstream os;
    if (!t.title.empty()) os << "### " << t.title << "\n\n";
    os << "|  |";
    for (const auto& c : t.col_labels) os << " " << c << " |";
    os << "\n|---|";
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) os << "---|";
    os << "\n";
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
        os << "| " << t.row_labels[r] << " |";
        for (long v : t.values[r]) os << " " << v << " |";
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    os << "";
    for (const auto& c : t.col_labels) os << "," << csv_quote(c);
    os << "\n";
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
        os << csv_quote(t.row_labels[r]);
        for (long v : t.values[r]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json table_to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["title"] = t.title;
    j["rows"] = t.row_labels;
    j["cols"] = t.col_labels;
    j["values"] = t.values;
    return j;
}

Table table_from_json(const nlohmann::ordered_json& j) {
    Table t;
    t.title = j.at("title").get<std::string>();
    t.row_labels = j.at("rows").get<std::vector<std::string>>();
    t.col_labels = j.at("cols").get<std::vector<std::string>>();
    t.values = j.at("values").get<std::vector<std::vector<long>>>();
    return t;
}

std::string render_table(const Table& t, const std::string& format) {
    if (format == "md") return render_markdown(t);
    if (format == "csv") return render_csv(t);
    if (format == "json") return table_to_json(t).dump(2) + "\n";
    throw std::invalid_argument("render_table: unknown format '" + format + "'");
}

} // namespace fdalg
