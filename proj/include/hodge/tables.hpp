#pragma once

#include <optional>

#include "hodge/search.hpp"

namespace hodge {

/// One verifiable reference fact: either the complete principal-grading set
/// of a search problem, an eigenvalue-pattern report, a real/quaternionic
/// label, or a catalog-emptiness claim.
struct TableCase {
    enum class Kind { SearchSet, ReportH, StructureLabel, CatalogEmpty };

    std::string table_id;
    std::string subcase;
    Kind kind;
    LieType type;

    // SearchSet: highest weights to search (empty = the whole catalog) and
    // the complete expected set of (mu, n) solutions.
    std::vector<std::vector<i64>> selection;
    std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected;

    // ReportH / StructureLabel inputs
    std::vector<i64> mu;
    std::vector<i64> grading;
    bool doubled = false; // evaluate V_C = U + U* even for self-dual mu
    std::vector<i64> expected_h;
    std::optional<Structure> expected_structure;
    std::optional<Reason> expected_reason; // is_principal reason on the plain spec

    bool paper_typo = false; // expected value corrects a typo in the source table
};

std::vector<TableCase> golden_tables(const Limits& limits);

/// Distinct table ids in presentation order.
std::vector<std::string> golden_table_ids(const Limits& limits);

struct CaseResult {
    std::string table_id;
    std::string subcase;
    bool pass = false;
    bool paper_typo = false;
    std::vector<std::string> found, expected, missing, extra;
    std::string message;
};

struct VerifyReport {
    std::vector<CaseResult> cases;

    bool all_pass() const
    {
        for (const auto& c : cases)
            if (!c.pass)
                return false;
        return true;
    }
};

/// Recomputes every selected table and diffs against the embedded expected
/// values.  `scopes` entries match table ids by prefix; {"all"} selects
/// everything; an entry matching nothing is a config error.
VerifyReport verify_tables(const std::vector<std::string>& scopes, const SearchOptions& opts);

std::string render_report_text(const VerifyReport& report);
std::string render_report_json(const VerifyReport& report);

} // namespace hodge
