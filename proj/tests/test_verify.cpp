#include <doctest.h>

#include <stdexcept>
#include <sstream>
#include <string>

#include "qsyncgeo/verify.hpp"

using namespace qsyncgeo;

TEST_CASE("reference rows") {
    const auto& pg = reference_rows(Family::PG);
    const auto& eg = reference_rows(Family::EG);
    CHECK(pg.size() == 32);
    CHECK(eg.size() == 26);
    bool saw = false;
    for (const ReferenceRow& r : pg)
        if (r.spec.m == 4 && r.spec.h == 2 && r.spec.t == 2) {
            saw = true;
            CHECK(r.n == 341);
            CHECK(r.k == 196);
            CHECK(r.d == 21);
        }
    CHECK(saw);
    for (const ReferenceRow& r : eg)
        if (r.spec.m == 6 && r.spec.h == 4 && r.spec.t == 4) {
            CHECK(r.n == 16777215);
            CHECK(r.k == 16490000);
            CHECK(r.d == 287);
        }
}

TEST_CASE("table reproduction diffs computed values against expectations") {
    const CheckResult ok = check_table_reproduction(Family::PG, reference_rows(Family::PG), 2000);
    CHECK(ok.pass);

    auto tampered = reference_rows(Family::PG);
    for (ReferenceRow& r : tampered)
        if (r.n == 31 && r.k == 16) r.k = 17;
    const CheckResult bad = check_table_reproduction(Family::PG, tampered, 2000);
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("pg(4,1,2)") != std::string::npos);
}

TEST_CASE("quick verification passes end to end") {
    VerifyConfig cfg;
    cfg.level = VerifyLevel::quick;
    const VerifyReport rep = run_verify(cfg);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 15);

    const std::string text = verify_report_text(rep);
    std::istringstream in(text);
    std::string line;
    size_t lines = 0;
    bool summary = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++lines;
        if (line == "all checks passed") {
            summary = true;
            continue;
        }
        const bool tagged =
            line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0;
        CHECK(tagged);
    }
    CHECK(summary);
    CHECK(lines == rep.checks.size() + 1);

    const std::string js = verify_report_json(rep);
    CHECK(js.find("\"exit_status\": 0") != std::string::npos);
    CHECK(js.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(js.find("\"fail\"") == std::string::npos);
}

TEST_CASE("a non-primitive override is caught and named") {
    VerifyConfig cfg;
    cfg.level = VerifyLevel::quick;
    cfg.polys = PrimitivePolyTable::with_overrides_file(std::string(TEST_DATA_DIR) +
                                                        "/corrupt_primitive.txt");
    const VerifyReport rep = run_verify(cfg);
    CHECK_FALSE(rep.all_pass());
    bool named = false;
    for (const CheckResult& c : rep.checks)
        if (c.name == "primitive-moduli") {
            named = true;
            CHECK_FALSE(c.pass);
            CHECK(c.detail.find("0x1f") != std::string::npos);
        }
    CHECK(named);
    const std::string text = verify_report_text(rep);
    CHECK(text.find("FAIL primitive-moduli") != std::string::npos);
    CHECK(text.find("CHECKS FAILED") != std::string::npos);
}
