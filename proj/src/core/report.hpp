#ifndef QCV_REPORT_HPP
#define QCV_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace qcv {

// Result of one verification sweep: which instances were checked and which
// parameter tuples failed. Empty failure list == every instance is an exact
// equality.
struct IdentityReport {
    std::string suite_id;
    std::map<std::string, std::string> parameters;
    long checked = 0;
    std::vector<std::map<std::string, std::string>> failures;
    // set when the suite refuses to run (violated assumption); the report then
    // carries the reason and checked == 0
    std::string rejected_reason;

    bool passed() const { return rejected_reason.empty() && failures.empty(); }
    bool rejected() const { return !rejected_reason.empty(); }

    void fail(std::map<std::string, std::string> tuple) {
        failures.push_back(std::move(tuple));
    }

    std::string to_json() const;
};

std::string reports_to_json(const std::vector<IdentityReport>& reports);

} // namespace qcv

#endif
