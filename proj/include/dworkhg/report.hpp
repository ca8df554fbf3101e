#pragma once
// Verification reporting: one row per checked instance, serializable to a
// deterministic JSON document (values as exact decimal/residue strings).
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dworkhg {

struct VerificationReport {
    std::string theorem;  // identity id, e.g. "k3-count-exact", "hasse-davenport"
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
    std::string lhs, rhs;     // exact decimal or residue strings
    std::string status;       // pass | fail | vacuous | conjecture
    std::string discrepancy;  // "0", exact difference, or error-bound note

    bool counts_as_failure(bool strict_conjectures) const {
        if (status == "fail") return true;
        if (status == "conjecture" && strict_conjectures && discrepancy != "0") return true;
        return false;
    }
};

VerificationReport make_report(std::string theorem,
                               std::vector<std::pair<std::string, std::string>> params,
                               std::string lhs, std::string rhs, bool pass,
                               std::string discrepancy = "");

// Aggregated tallies per theorem id, in first-appearance order.
struct SuiteSummary {
    std::vector<std::pair<std::string, std::array<uint64_t, 4>>> tally;  // pass, fail, vacuous, conjecture
    uint64_t failures = 0;  // non-conjecture failures
};
SuiteSummary summarize(const std::vector<VerificationReport>& rows, bool strict_conjectures);

// JSON document: { "config": {...}, "rows": [...] }; keys emitted in insertion
// order, no timestamps, so identical configs give byte-identical files.
std::string reports_to_json(const std::vector<std::pair<std::string, std::string>>& config,
                            const std::vector<VerificationReport>& rows);

std::string summary_table(const SuiteSummary& s);

}  // namespace dworkhg
