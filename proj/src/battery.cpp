#include "fdalg/battery.hpp"

namespace fdalg {

namespace {
const char* status_name(ItemStatus s) {
    switch (s) {
    case ItemStatus::match: return "match";
    case ItemStatus::mismatch: return "mismatch";
    default: return "evidence-only";
    }
}
} // namespace

std::string render_markdown(const BatteryReport& r) {
    std::ostringstream os;
    os << "# Verification battery\n\n";
    os << "parameters: `" << r.params << "`\n\n";
    os << "| item | expected | computed | status |\n|---|---|---|---|\n";
    for (const auto& it : r.items)
        os << "| " << it.name << " | " << (it.expected.empty() ? "-" : it.expected) << " | "
           << it.computed << " | " << status_name(it.status) << " |\n";
    os << "\nresult: " << (r.any_mismatch() ? "MISMATCH" : "ok") << "\n";
    return os.str();
}

nlohmann::ordered_json report_to_json(const BatteryReport& r) {
    nlohmann::ordered_json j;
    j["parameters"] = r.params;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& it : r.items) {
        nlohmann::ordered_json o;
        o["name"] = it.name;
        if (!it.expected.empty()) o["expected"] = it.expected;
        o["computed"] = it.computed;
        o["status"] = status_name(it.status);
        items.push_back(std::move(o));
    }
    j["items"] = std::move(items);
    j["mismatch"] = r.any_mismatch();
    return j;
}

} // namespace fdalg
