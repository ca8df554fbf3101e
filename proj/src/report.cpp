#include "dworkhg/report.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <iomanip>
#include <sstream>

namespace dworkhg {

VerificationReport make_report(std::string theorem,
                               std::vector<std::pair<std::string, std::string>> params,
                               std::string lhs, std::string rhs, bool pass,
                               std::string discrepancy) {
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.status = pass ? "pass" : "fail";
    r.discrepancy = discrepancy.empty() ? (pass ? "0" : "nonzero") : std::move(discrepancy);
    return r;
}

SuiteSummary summarize(const std::vector<VerificationReport>& rows, bool strict_conjectures) {
    SuiteSummary s;
    for (const auto& r : rows) {
        size_t idx = 0;
        for (; idx < s.tally.size(); ++idx)
            if (s.tally[idx].first == r.theorem) break;
        if (idx == s.tally.size()) s.tally.push_back({r.theorem, {0, 0, 0, 0}});
        auto& t = s.tally[idx].second;
        if (r.status == "pass") ++t[0];
        else if (r.status == "fail") ++t[1];
        else if (r.status == "vacuous") ++t[2];
        else ++t[3];
        if (r.counts_as_failure(strict_conjectures)) ++s.failures;
    }
    return s;
}

std::string reports_to_json(const std::vector<std::pair<std::string, std::string>>& config,
                            const std::vector<VerificationReport>& rows) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    doc["config"] = cfg;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["theorem"] = r.theorem;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        row["params"] = params;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["status"] = r.status;
        row["discrepancy"] = r.discrepancy;
        doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

std::string summary_table(const SuiteSummary& s) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "theorem" << std::right << std::setw(8) << "pass"
       << std::setw(8) << "fail" << std::setw(9) << "vacuous" << std::setw(12) << "conjecture"
       << "\n";
    for (const auto& [name, t] : s.tally)
        os << std::left << std::setw(22) << name << std::right << std::setw(8) << t[0]
           << std::setw(8) << t[1] << std::setw(9) << t[2] << std::setw(12) << t[3] << "\n";
    return os.str();
}

}  // namespace dworkhg
