#pragma once

#include "shintani/eps_expansion.hpp"
#include "shintani/shintani_formula.hpp"
#include "shintani/theorem1.hpp"
#include "shintani/theorem2.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shintani {

/// One classnum run. All h values present must agree (asserted before the
/// report is built unless crosscheck is disabled).
struct RunReport {
    long long d = 0;
    long long p = 0;
    std::vector<std::string> methods;
    std::vector<std::pair<std::string, Int>> h;          // per method
    std::vector<std::pair<std::string, long long>> timing_us;
    long long ell = 0;
    long long cycle_count = 0;
    long long rho_a = 0, rho_b = 0;
    Int C, D;
};

/// method is one of "thm1", "thm2", "direct", "all".
/// Throws INTERNAL_INCONSISTENCY on a cross-method mismatch when crosscheck
/// is on; the pinned generator lift is validated for full order.
RunReport run_classnum(const FieldContext& F, long long p, const std::string& method,
                       std::optional<std::pair<long long, long long>> rho_override,
                       bool crosscheck);

struct Table1Row {
    long long p = 0;
    long long rho_a = 0, rho_b = 0;
    Int C, D;
    Int first_summand, last_summand;
    Int h;
};

struct Table2Row {
    long long p = 0;
    std::string expansion;
    long long ell = 0;
    Int h;
};

std::vector<long long> eligible_primes(const FieldContext& F, long long pmax);
Table1Row table1_row(const FieldContext& F, long long p);
Table2Row table2_row(const FieldContext& F, long long p);

nlohmann::json int_json(const Int& n);  // number when it fits int64, else string
nlohmann::json report_json(const RunReport& r);
std::string report_tsv(const RunReport& r);
nlohmann::json eligibility_json(long long d, long long p, const EligibilityReport& rep);
nlohmann::json table1_json(const std::vector<Table1Row>& rows);
nlohmann::json table2_json(const std::vector<Table2Row>& rows);
std::string table1_tsv(const std::vector<Table1Row>& rows);
std::string table2_tsv(const std::vector<Table2Row>& rows);

}  // namespace shintani
