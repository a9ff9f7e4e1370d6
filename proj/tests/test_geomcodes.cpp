#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <set>

#include "qsyncgeo/geomcodes.hpp"

using namespace qsyncgeo;

TEST_CASE("index set validates doubling closure") {
    CHECK_THROWS_AS(IndexSet(31, {1, 2}), std::logic_error);       // 4 missing
    CHECK_THROWS_AS(IndexSet(31, {0, 1, 2, 4, 8, 16}), std::invalid_argument);
    const IndexSet sorted_in(31, {2, 1, 4, 8, 16});  // input order is normalized
    CHECK(std::is_sorted(sorted_in.members.begin(), sorted_in.members.end()));
    const IndexSet ok(31, {1, 2, 4, 8, 16});
    CHECK(ok.contains(8));
    CHECK_FALSE(ok.contains(3));
    // Residue 31 doubles to 31 (0 stands for n).
    CHECK_NOTHROW(IndexSet(31, {31}));
}

TEST_CASE("q-ary digit weights") {
    CHECK(weight_qary(0b1101, 1) == 3);
    CHECK(weight_qary(47, 2) == 8);   // digits 3,3,2 in base 4
    CHECK(weight_qary(47, 4) == 17);  // digits 15,2 in base 16
    CHECK(weight_qary(0, 3) == 0);
}

TEST_CASE("index sets match the dimension formulas") {
    const IndexSet ip = pg_index_set(4, 1, 2);
    CHECK(ip.n == 31);
    CHECK(ip.members.size() == 31 - 16);
    CHECK_FALSE(ip.contains(31));  // n itself is never a root exponent
    const IndexSet ie = eg_index_set(5, 2, 3);
    CHECK(ie.n == 1023);
    CHECK(ie.members.size() == 1023 - 748);
    CHECK_FALSE(ie.contains(1023));
}

TEST_CASE("index scans reject out-of-range shapes") {
    CHECK_THROWS_AS(pg_index_set(99, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(eg_index_set(5, 99, 3), std::invalid_argument);
    CHECK_THROWS_AS(pg_index_set(4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(pg_index_set(4, 1, 4), std::invalid_argument);  // t > m-1
}

TEST_CASE("parallel scans equal the serial reference") {
    for (auto [m, h, t] : {std::array{4, 2, 2}, std::array{6, 1, 3}}) {
        const IndexSet a = pg_index_set(m, h, t);
        const IndexSet b = pg_index_set_serial(m, h, t);
        CHECK(a.members == b.members);
    }
    for (auto [m, h, t] : {std::array{5, 2, 3}, std::array{6, 2, 4}}) {
        const IndexSet a = eg_index_set(m, h, t);
        const IndexSet b = eg_index_set_serial(m, h, t);
        CHECK(a.members == b.members);
    }
}

TEST_CASE("generator polynomials") {
    CHECK(pg_generator_poly(2, 1, 1) == BitPoly::from_uint(0xb));
    CHECK(pg_generator_poly(4, 1, 2) == BitPoly::from_uint(0x8faf));
    CHECK(pg_generator_poly(4, 1, 3) == BitPoly::from_uint(0x25));
    for (const GeometryCodeSpec spec :
         {GeometryCodeSpec{Family::PG, 4, 2, 2}, GeometryCodeSpec{Family::EG, 5, 2, 4}}) {
        const IndexSet I = index_set(spec);
        const BitPoly g = generator_poly(spec);
        CHECK(g.degree() == static_cast<long>(I.members.size()));
        CHECK(divides(g, BitPoly::x_pow_n_plus_one(I.n)));
    }
}

TEST_CASE("incidence-span dimensions") {
    CHECK(hamada_dimension(4, 1, 2) == 31 - 16 + 1);
    CHECK(hamada_dimension(4, 1, 4) == 1);  // the all-one vector
    CHECK(hamada_dimension(5, 2, 5) == 1);
    // Complementary to the index-set count: hamada = n - |I| + 1.
    for (auto [m, h, t] : {std::array{5, 2, 3}, std::array{6, 1, 3}}) {
        const IndexSet I = pg_index_set(m, h, t);
        CHECK(hamada_dimension(m, h, t) == I.members.size() + 1);
    }
}

TEST_CASE("parameter formulas reproduce the reference rows") {
    const CodeParams a = pg_params(4, 2, 2);
    CHECK(a.n == 341);
    CHECK(a.k == 196);
    CHECK(a.d == 21);
    const CodeParams b = eg_params(5, 3, 4);
    CHECK(b.n == 32767);
    CHECK(b.k == 32552);
    CHECK(b.d == 9);
    const CodeParams c = eg_params(6, 4, 4);
    CHECK(c.n == 16777215);
    CHECK(c.k == 16490000);
    CHECK(c.d == 287);
    const CodeParams e = params({Family::PG, 8, 2, 4});
    CHECK(e.n == 87381);
    CHECK(e.k == 51396);
    CHECK(e.d == 341);
}

TEST_CASE("shape validation names the violated bound") {
    CHECK_THROWS_WITH_AS(static_cast<void>(pg_params(70, 1, 2)),
                         doctest::Contains("code length out of range"),
                         std::invalid_argument);
    CHECK_THROWS_AS(eg_params(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(eg_params(5, 2, 5), std::invalid_argument);  // t > m-1
}

TEST_CASE("dual dimension agrees with the complement count") {
    for (auto [m, h, t] :
         {std::array{5, 2, 3}, std::array{4, 1, 2}, std::array{6, 1, 3}}) {
        const DualDimensionReport r = dual_dimension_check(m, h, t);
        CHECK(r.ok);
        CHECK(r.dual_dimension == r.n_minus_k);
    }
    CHECK_THROWS_AS(dual_dimension_check(5, 2, 4), std::invalid_argument);  // t > m-2
}

TEST_CASE("reference tables") {
    CHECK(table_specs(Family::PG).size() == 32);
    CHECK(table_specs(Family::EG).size() == 26);
    const auto rows = table_rows(Family::PG);
    REQUIRE(rows.size() == 32);
    const std::string csv = table_csv(rows);
    CHECK(csv.rfind("family,m,h,t,n,k,d\n", 0) == 0);
    CHECK(csv.find("pg,4,2,2,341,196,21\n") != std::string::npos);
    CHECK(csv.find("pg,8,2,7,87381,87300,5\n") != std::string::npos);
    // Every (m,h,t) appears once.
    std::set<std::array<int, 3>> keys;
    for (const TableRow& r : rows) keys.insert({r.spec.m, r.spec.h, r.spec.t});
    CHECK(keys.size() == rows.size());
}

TEST_CASE("json rows gate the generator polynomial by length") {
    std::vector<TableRow> rows;
    for (const TableRow& r : table_rows(Family::PG))
        if (r.params.n == 341 || r.params.n == 5461) rows.push_back(r);
    REQUIRE(rows.size() == 5);
    const std::string js = table_json(rows, 4096);
    CHECK(js.find("\"g_hex\"") != std::string::npos);
    const std::string upto341 = table_json(rows, 341);
    CHECK(upto341.find("\"g_hex\"") != std::string::npos);
    const std::string none = table_json(rows, 100);
    CHECK(none.find("\"g_hex\"") == std::string::npos);
}
