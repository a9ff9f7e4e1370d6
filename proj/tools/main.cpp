#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsyncgeo/codes.hpp"
#include "qsyncgeo/geomcodes.hpp"
#include "qsyncgeo/geometry.hpp"
#include "qsyncgeo/qsync.hpp"
#include "qsyncgeo/verify.hpp"

using namespace qsyncgeo;

namespace {

constexpr uint64_t default_max_n = uint64_t{1} << 21;
constexpr uint64_t max_max_n = uint64_t{1} << 25;
constexpr uint64_t huge_row_n = 16777215;  // the largest table rows, opt-in

struct CommonArgs {
    std::string overrides;

    PrimitivePolyTable polys() const {
        return overrides.empty() ? PrimitivePolyTable::builtin()
                                 : PrimitivePolyTable::with_overrides_file(overrides);
    }
};

void add_overrides_flag(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--primitive-overrides", args.overrides,
                    "file replacing canonical primitive moduli (lines: degree polynomial)")
        ->check(CLI::ExistingFile);
}

int cmd_table(const std::string& family, const std::string& format, uint64_t max_n,
              bool include_huge, const CommonArgs& common) {
    const Family f = family_from_string(family);
    const uint64_t cap = include_huge ? std::max(max_n, huge_row_n) : max_n;
    std::vector<TableRow> rows;
    uint64_t skipped = 0, largest = 0;
    for (const TableRow& row : table_rows(f)) {
        if (row.params.n <= cap) {
            rows.push_back(row);
        } else {
            ++skipped;
            largest = std::max(largest, row.params.n);
        }
    }
    if (skipped)
        std::cerr << "note: skipped " << skipped << " rows with n > " << cap
                  << " (largest n = " << largest
                  << "); raise --max-n or pass --include-huge to print them\n";
    if (format == "json")
        std::cout << table_json(rows, 4096, common.polys()) << '\n';
    else
        std::cout << table_csv(rows);
    return 0;
}

int cmd_code(const std::string& family, int m, int h, int t, const std::string& emit,
             const CommonArgs& common) {
    const GeometryCodeSpec spec{family_from_string(family), m, h, t};
    if (emit == "params") {
        const CodeParams p = params(spec);
        std::cout << p.n << ',' << p.k << ',' << p.d << '\n';
    } else if (emit == "genpoly") {
        const BitPoly g = generator_poly(spec, common.polys());
        std::cout << g.to_hex() << '\n' << g.to_sparse() << '\n';
    } else {  // roots
        for (uint64_t a : index_set(spec).members) std::cout << a << '\n';
    }
    return 0;
}

int cmd_qsync(const std::string& family, int m, int h, int t_inner, int t_outer,
              const std::string& format, const CommonArgs& common) {
    const QsyncSpec spec{family_from_string(family), m, h, t_inner, t_outer};
    if (format == "json")
        std::cout << qsync_json(spec, 4096, common.polys()) << '\n';
    else
        std::cout << qsync_row(spec, common.polys()) << '\n';
    return 0;
}

int cmd_verify(const std::string& level, const std::string& format, uint64_t max_n,
               bool include_huge, uint64_t seed, const CommonArgs& common) {
    VerifyConfig cfg;
    cfg.level = level == "quick" ? VerifyLevel::quick : VerifyLevel::full;
    cfg.max_n = max_n;
    cfg.include_huge = include_huge;
    cfg.seed = seed;
    cfg.polys = common.polys();
    const VerifyReport report = run_verify(cfg);
    if (format == "json")
        std::cout << verify_report_json(report) << '\n';
    else
        std::cout << verify_report_text(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary cyclic codes from finite projective and Euclidean geometries:\n"
                 "parameter tables, generator polynomials, and the quantum\n"
                 "synchronizable codes built from nested dual-containing pairs"};
    app.require_subcommand(1);

    const auto family_check = CLI::IsMember({"pg", "eg"});
    const auto format_check = CLI::IsMember({"csv", "json"});
    const auto max_n_check = CLI::Range(uint64_t{1}, max_max_n);

    std::string family, format = "csv", emit = "params", level;
    int m = 0, h = 0, t = 0, t_inner = 0, t_outer = 0;
    uint64_t max_n = default_max_n, seed = 12345;
    bool include_huge = false;
    CommonArgs common;

    CLI::App* table = app.add_subcommand("table", "print a family's reference parameter table");
    table->add_option("--family", family, "code family")->required()->check(family_check);
    table->add_option("--format", format, "output format")->check(format_check);
    table->add_option("--max-n", max_n, "skip rows with larger n")->check(max_n_check);
    table->add_flag("--include-huge", include_huge, "also print the n = 16777215 rows");
    add_overrides_flag(table, common);

    CLI::App* code = app.add_subcommand("code", "construct one code");
    code->add_option("FAMILY", family, "pg or eg")->required()->check(family_check);
    code->add_option("M", m, "geometry dimension")->required();
    code->add_option("H", h, "field exponent, q = 2^H")->required();
    code->add_option("T", t, "flat dimension")->required();
    code->add_option("--emit", emit, "what to print")
        ->check(CLI::IsMember({"params", "genpoly", "roots"}));
    add_overrides_flag(code, common);

    CLI::App* qsync = app.add_subcommand("qsync", "parameters of a synchronizable code pair");
    qsync->add_option("FAMILY", family, "pg or eg")->required()->check(family_check);
    qsync->add_option("M", m, "geometry dimension")->required();
    qsync->add_option("H", h, "field exponent, q = 2^H")->required();
    qsync->add_option("T_INNER", t_inner, "inner flat dimension")->required();
    qsync->add_option("T_OUTER", t_outer, "outer flat dimension")->required();
    qsync->add_option("--format", format, "output format")->check(format_check);
    add_overrides_flag(qsync, common);

    CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
    verify->add_option("LEVEL", level, "quick (n <= 1023) or full (n <= max-n)")
        ->required()
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--format", format, "output format")->check(format_check);
    verify->add_option("--max-n", max_n, "cap for full-level checks")->check(max_n_check);
    verify->add_flag("--include-huge", include_huge, "extend the cap to the n = 16777215 rows");
    verify->add_option("--seed", seed, "seed for the sampled checks");
    add_overrides_flag(verify, common);

    try {
        app.parse(argc, argv);
        if (table->parsed())
            return cmd_table(family, format, max_n, include_huge, common);
        if (code->parsed()) return cmd_code(family, m, h, t, emit, common);
        if (qsync->parsed())
            return cmd_qsync(family, m, h, t_inner, t_outer, format, common);
        return cmd_verify(level, format, max_n, include_huge, seed, common);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, everything else is a usage error
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
