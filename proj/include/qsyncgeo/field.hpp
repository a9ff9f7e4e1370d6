#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qsyncgeo/bitpoly.hpp"

namespace qsyncgeo {

// Canonical modulus choices for GF(2^e), e = 1..32: the lexicographically smallest
// primitive polynomial of each degree (coefficient vector read as an integer, low
// exponents least significant). Overrides exist so a different primitive modulus can
// be swapped in for reproducibility experiments; every entry is re-validated on use.
class PrimitivePolyTable {
public:
    static constexpr int max_degree = 32;

    static const PrimitivePolyTable& builtin();
    // Override file: one "degree polynomial" pair per line, polynomial in either
    // text form ("0x409" or "x^10+x^3+1"); '#' starts a comment.
    static PrimitivePolyTable with_overrides_file(const std::string& path);

    uint64_t modulus_bits(int degree) const;
    BitPoly modulus(int degree) const;
    bool overridden(int degree) const { return overridden_[static_cast<size_t>(degree)]; }

private:
    PrimitivePolyTable();
    std::array<uint64_t, max_degree + 1> mods_{};
    std::array<bool, max_degree + 1> overridden_{};
};

// Multiplicative-order test: a degree-e binary polynomial is primitive iff the
// order of x in GF(2)[x]/(f) is exactly 2^e - 1.
bool is_primitive(const BitPoly& f);

// GF(2^e) for e <= 32. Elements are uint64_t coefficient vectors of polynomials in
// the class of x, reduced modulo a primitive polynomial; x itself (rep 2) generates
// the multiplicative group.
class Field {
public:
    explicit Field(int degree, const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());
    Field(int degree, uint64_t modulus_bits);  // validates primitivity

    int degree() const { return e_; }
    uint64_t modulus_bits() const { return mod_; }
    uint64_t order() const { return (uint64_t{1} << e_) - 1; }  // size of the unit group
    uint64_t alpha() const { return 2; }

    uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, int64_t k) const;  // 0^0 = 1; negative k inverts (a != 0)
    uint64_t inv(uint64_t a) const;
    uint64_t trace(uint64_t a) const;           // into GF(2)
    // Evaluate a GF(2)-coefficient polynomial at a field element.
    uint64_t eval(const BitPoly& p, uint64_t x) const;

private:
    int e_;
    uint64_t mod_;
};

uint64_t field_pow(const Field& f, uint64_t base, int64_t exp);

// Image of the small field's generator x inside the big field (h = small.degree()
// must divide big.degree()): the least power of the subfield generator that is a
// root of the small modulus. Evaluating any small element's polynomial form at this
// image gives a field embedding GF(2^h) -> GF(2^e).
uint64_t subfield_generator_image(const Field& small, const Field& big);

}  // namespace qsyncgeo
