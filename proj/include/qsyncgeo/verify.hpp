#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsyncgeo/field.hpp"
#include "qsyncgeo/geomcodes.hpp"

namespace qsyncgeo {

// Expected parameter rows, frozen as data so the suite can diff computed values
// against them. Everything printed by the CLI is computed; these live only here.
struct ReferenceRow {
    GeometryCodeSpec spec;
    uint64_t n, k, d;
};
const std::vector<ReferenceRow>& reference_rows(Family f);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class VerifyLevel { quick, full };

struct VerifyConfig {
    VerifyLevel level = VerifyLevel::full;
    uint64_t max_n = uint64_t{1} << 21;
    bool include_huge = false;  // unlocks the 2^24-1 rows in the table checks
    uint64_t seed = 12345;      // for the sampled shift-closure words
    PrimitivePolyTable polys = PrimitivePolyTable::builtin();
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// One family's table against explicit expectations. Exposed separately so the
// test suite can tamper with one expectation and watch the check fail.
CheckResult check_table_reproduction(Family f, const std::vector<ReferenceRow>& expected,
                                     uint64_t cap);

VerifyReport run_verify(const VerifyConfig& cfg);

std::string verify_report_text(const VerifyReport& r);  // one PASS/FAIL line per check
std::string verify_report_json(const VerifyReport& r);

}  // namespace qsyncgeo
