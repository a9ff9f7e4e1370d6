#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsyncgeo {

// Dense polynomial over GF(2). Bit i of words()[i/64] is the coefficient of x^i.
// Addition is XOR; there is no distinction between + and - in characteristic 2.
class BitPoly {
public:
    // Hard cap on representable degree; constructors and arithmetic refuse results
    // beyond it so a typo'd length cannot silently allocate gigabytes.
    static constexpr long max_degree = 1L << 25;

    BitPoly() = default;  // zero polynomial

    static BitPoly zero() { return {}; }
    static BitPoly one();
    static BitPoly monomial(long e);               // x^e
    static BitPoly x_pow_n_plus_one(long n);       // x^n + 1  (n >= 1)
    static BitPoly from_words(std::vector<uint64_t> w, long nbits);
    static BitPoly from_uint(uint64_t bits);

    long degree() const;                           // -1 for the zero polynomial
    bool is_zero() const { return words_.empty(); }
    bool bit(long i) const;
    void set_bit(long i);                          // turns coefficient of x^i on
    long weight() const;                           // number of nonzero coefficients
    bool constant_term() const { return bit(0); }

    BitPoly& operator+=(const BitPoly& o);
    friend BitPoly operator+(BitPoly a, const BitPoly& b) { a += b; return a; }
    friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
    BitPoly shifted(long s) const;                 // multiply by x^s
    BitPoly square() const;
    BitPoly reciprocal() const;                    // x^deg(p) * p(1/x)

    friend bool operator==(const BitPoly&, const BitPoly&) = default;

    const std::vector<uint64_t>& words() const { return words_; }

    // Text forms. Hex is the coefficient vector read as one integer, bit 0 = constant
    // term ("0x8081" = x^15+x^7+1). Sparse lists terms by descending exponent.
    std::string to_hex() const;
    std::string to_sparse() const;
    static BitPoly parse(std::string_view text);   // accepts either form

private:
    std::vector<uint64_t> words_;

    void trim();
    friend std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly&, const BitPoly&);
    friend void xor_shifted(std::vector<uint64_t>& acc, const std::vector<uint64_t>& src, long shift);
};

// Schoolbook shift-and-XOR product (word-level inner loop). Quadratic on purpose:
// every in-scope product has one operand of modest weight, and the predictable
// memory walk beats anything fancier at these sizes.
BitPoly poly_mul(const BitPoly& a, const BitPoly& b);

// Quotient and remainder with deg r < deg b. b must be nonzero.
std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly& a, const BitPoly& b);
BitPoly poly_mod(const BitPoly& a, const BitPoly& b);
bool divides(const BitPoly& divisor, const BitPoly& dividend);

// x^exp mod modulus via square-and-multiply (multiplying by x is a shift).
BitPoly poly_modexp(uint64_t exp, const BitPoly& modulus);

}  // namespace qsyncgeo
