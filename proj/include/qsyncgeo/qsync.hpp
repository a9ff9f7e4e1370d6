#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qsyncgeo/codes.hpp"
#include "qsyncgeo/geomcodes.hpp"

namespace qsyncgeo {

// A nested pair of geometric codes over the same geometry: the inner code
// (smaller dimension, higher-degree generator) must be dual-containing, which
// pins 2*t_inner >= m+1; the outer one is any later member of the chain, so
// non-adjacent pairs are allowed.
struct QsyncSpec {
    Family family;
    int m = 0, h = 0;
    int t_inner = 0, t_outer = 0;
};

struct QsyncParams {
    uint64_t n = 0;
    uint64_t k1 = 0, k2 = 0;  // inner / outer dimensions
    uint64_t d1 = 0, d2 = 0;  // inner / outer distances, from the family formulas
    BitPoly f;                // g_inner / g_outer, degree k2 - k1
    uint64_t ord_f = 0;       // order of x mod f; equals n for every in-range spec
    uint64_t logical = 0;     // 2*k1 - n
    uint64_t phase_t = 0;     // floor((d1-1)/2) misalignment-error guarantee
    uint64_t bit_t = 0;       // floor((d2-1)/2) bit-error guarantee
    uint64_t max_total = 0;   // ord_f - 1 bounds the total tolerated misalignment
};

// f with g_inner = f * g_outer exactly; a nonzero remainder means the codes are
// not nested. The inner generator is the higher-degree one.
BitPoly quotient_poly(const BitPoly& g_outer, const BitPoly& g_inner);

// Validates the spec and the structural preconditions computationally
// (cyclicity via divisibility, dual containment of the inner code, nesting),
// then assembles the parameter block. Matrix-based dual checks run for
// n <= 2^12, the polynomial criterion above.
QsyncParams build_qsync(const QsyncSpec& spec,
                        const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

bool assert_max_tolerance(const QsyncParams& p);  // ord_f == n

// Exponents lying in the inner index set but not the outer one, so beta^j0,
// beta^j1 are roots of f; gcd structure of the pair forces ord(f) = n.
// t is the inner dimension parameter.
std::pair<uint64_t, uint64_t> order_witness_exponents(Family family, int m, int h, int t_inner);

// Closed-form misalignment guarantees as the theorems state them; each equals
// floor((d-1)/2) of the code at t, which is what QsyncParams reports. The bit
// guarantee is the same form evaluated at t_outer.
uint64_t pg_phase_guarantee(int m, int h, int t);
uint64_t eg_phase_guarantee(int m, int h, int t);

// One-line report, e.g. "[[1365+a,763]] a<1365 phase=10 bit=2" with a standing
// for the tolerated left+right misalignment total.
std::string qsync_row(const QsyncSpec& spec,
                      const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

// {family, m, h, t_inner, t_outer, n, logical, ord_f, phase_t, bit_t} plus
// f_hex when n is at most f_hex_n_gate.
std::string qsync_json(const QsyncSpec& spec, uint64_t f_hex_n_gate = 4096,
                       const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

}  // namespace qsyncgeo
