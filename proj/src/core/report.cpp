#include "report.hpp"

#include <json.hpp>

namespace qcv {

namespace {

nlohmann::ordered_json report_json(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite_id;
    j["params"] = r.parameters;
    j["checked"] = r.checked;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) j["failures"].push_back(f);
    if (!r.rejected_reason.empty()) j["rejected"] = r.rejected_reason;
    j["pass"] = r.passed();
    return j;
}

} // namespace

std::string IdentityReport::to_json() const { return report_json(*this).dump(2); }

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

} // namespace qcv
