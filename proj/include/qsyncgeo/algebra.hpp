#pragma once

#include <cstdint>
#include <vector>

#include "qsyncgeo/bitpoly.hpp"
#include "qsyncgeo/field.hpp"

namespace qsyncgeo {

// 2-cyclotomic coset of j modulo n (n odd), ascending. {j, 2j, 4j, ...} mod n.
std::vector<uint64_t> cyclotomic_coset(uint64_t j, uint64_t n);

// All divisors of n, ascending.
std::vector<uint64_t> divisors_of(uint64_t n);

// Minimal polynomial over GF(2) of beta^j, where beta is a field element of
// multiplicative order n. Expands prod_{c in coset(j,n)} (x - beta^c) with
// coefficients in the field and checks they all land in GF(2).
BitPoly minimal_polynomial(uint64_t j, const Field& f, uint64_t beta, uint64_t n);

// Multiplicative order of x in GF(2)[x]/(f), given some known multiple of it
// (any n with f | x^n + 1 works). Scans the divisors of `multiple` ascending.
uint64_t poly_order(const BitPoly& f, uint64_t multiple);

// Same, but with no known multiple: steps x, x^2, x^3, ... until 1 reappears.
// Throws if the order exceeds `cap`.
uint64_t poly_order_bounded(const BitPoly& f, uint64_t cap = uint64_t{1} << 20);

}  // namespace qsyncgeo
