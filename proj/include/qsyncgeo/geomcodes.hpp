#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsyncgeo/bitpoly.hpp"
#include "qsyncgeo/field.hpp"
#include "qsyncgeo/geometry.hpp"

namespace qsyncgeo {

struct GeometryCodeSpec {
    Family family;
    int m, h, t;
};

// Root-exponent set of a generator polynomial: sorted members of 1..n, closed
// under doubling mod n (with residue 0 standing for n). The constructor
// re-checks the closure; a violation means the scan convention broke.
struct IndexSet {
    uint64_t n = 0;
    std::vector<uint64_t> members;

    IndexSet() = default;
    IndexSet(uint64_t n, std::vector<uint64_t> members);
    bool contains(uint64_t a) const;
};

// Digit sum of a in base 2^h, evaluated over the integers.
uint64_t weight_qary(uint64_t a, int h);

// Exponent sets: all a in 1..n whose rotated 2^h-ary weights stay within
// (m-t)(2^h-1). The weight condition is evaluated on a(2^h-1)*2^i (projective)
// or a*2^i (Euclidean) reduced modulo 2^w-1 with residue 0 mapped back to 2^w-1,
// i = 0..h; multiplication by 2 mod 2^w-1 is a w-bit rotation. The parallel
// scans chunk the range and concatenate in order, so their output is identical
// to the serial reference kernels.
IndexSet pg_index_set(int m, int h, int t);
IndexSet eg_index_set(int m, int h, int t);
IndexSet pg_index_set_serial(int m, int h, int t);
IndexSet eg_index_set_serial(int m, int h, int t);
IndexSet index_set(const GeometryCodeSpec& spec);

// Generator polynomial: product over the doubling-cosets partitioning the index
// set of the minimal polynomials of beta^j; every coefficient must land in
// GF(2) and the degree must equal the index set size.
BitPoly pg_generator_poly(int m, int h, int t,
                          const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());
BitPoly eg_generator_poly(int m, int h, int t,
                          const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());
BitPoly generator_poly(const GeometryCodeSpec& spec,
                       const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

// Incidence-span dimension of the t-flats of PG(m,2^h), by exact signed
// big-integer summation over the digit-constraint tuples (s_0..s_h), s_h = s_0,
// t+1 <= s_j <= m+1, 0 <= 2s_{j+1}-s_j <= m+1. Defined for 1 <= t <= m; at
// t = m the single all-ones incidence vector gives 1.
uint64_t hamada_dimension(int m, int h, int t);

struct CodeParams {
    uint64_t n = 0, k = 0, d = 0;
    std::string k_source = "formula";
    std::string d_source = "formula";
};

// n = (2^{h(m+1)}-1)/(2^h-1), k = n - hamada + 1, d = (2^{h(m-t+1)}-1)/(2^h-1).
CodeParams pg_params(int m, int h, int t);
// n = 2^{hm}-1, k = 2^{hm} - hamada(m) + hamada(m-1), d = (2^h+2)2^{h(m-t-1)} - 1.
CodeParams eg_params(int m, int h, int t);
CodeParams params(const GeometryCodeSpec& spec);

// Consistency of the Euclidean dual dimension with the projective incidence
// ranks: dim dual = hamada(m) - hamada(m-1) - 1 must equal n - k.
struct DualDimensionReport {
    uint64_t dual_dimension = 0;
    uint64_t n_minus_k = 0;
    bool ok = false;
};
DualDimensionReport dual_dimension_check(int m, int h, int t);  // 1 <= t <= m-2

// The (m,h,t) row sets of the reference parameter tables the CLI reproduces.
const std::vector<GeometryCodeSpec>& table_specs(Family f);

struct TableRow {
    GeometryCodeSpec spec;
    CodeParams params;
};
std::vector<TableRow> table_rows(Family f);

std::string table_csv(const std::vector<TableRow>& rows);
// JSON rows carry the generator polynomial hex for lengths up to genpoly_n_gate.
std::string table_json(const std::vector<TableRow>& rows, uint64_t genpoly_n_gate = 4096,
                       const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

}  // namespace qsyncgeo
