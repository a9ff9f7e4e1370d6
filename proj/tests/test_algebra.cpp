#include <doctest.h>

#include <stdexcept>
#include <numeric>

#include "qsyncgeo/algebra.hpp"

using namespace qsyncgeo;

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_coset(1, 31) == std::vector<uint64_t>{1, 2, 4, 8, 16});
    CHECK(cyclotomic_coset(5, 31) == std::vector<uint64_t>{5, 9, 10, 18, 20});
    CHECK(cyclotomic_coset(0, 31) == std::vector<uint64_t>{0});
    CHECK(cyclotomic_coset(33, 1023) == std::vector<uint64_t>{33, 66, 132, 264, 528});
    // Doubling permutes each coset.
    for (uint64_t j : {3u, 7u, 11u}) {
        const auto c = cyclotomic_coset(j, 127);
        for (uint64_t a : c) {
            const auto d = cyclotomic_coset(2 * a % 127, 127);
            CHECK(c == d);
        }
    }
}

TEST_CASE("divisors") {
    CHECK(divisors_of(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(1) == std::vector<uint64_t>{1});
    CHECK(divisors_of(31) == std::vector<uint64_t>{1, 31});
}

TEST_CASE("minimal polynomials") {
    const Field f5(5);
    // The minimal polynomial of alpha is the field modulus itself.
    CHECK(minimal_polynomial(1, f5, f5.alpha(), 31) == BitPoly::from_uint(0x25));
    CHECK(minimal_polynomial(0, f5, f5.alpha(), 31) == BitPoly::parse("x+1"));
    for (uint64_t j = 1; j < 31; ++j) {
        const BitPoly m = minimal_polynomial(j, f5, f5.alpha(), 31);
        CHECK(m.degree() == static_cast<long>(cyclotomic_coset(j, 31).size()));
        CHECK(divides(m, BitPoly::x_pow_n_plus_one(31)));
        CHECK(f5.eval(m, f5.pow(f5.alpha(), static_cast<int64_t>(j))) == 0);
    }
    // beta of composite order: the 341-st roots inside GF(2^10).
    const Field f10(10);
    const uint64_t beta = f10.pow(f10.alpha(), 3);
    const BitPoly m = minimal_polynomial(1, f10, beta, 341);
    CHECK(m.degree() == 10);
    CHECK(divides(m, BitPoly::x_pow_n_plus_one(341)));
}

TEST_CASE("polynomial order") {
    CHECK(poly_order(BitPoly::parse("x+1"), 12) == 1);
    CHECK(poly_order(BitPoly::parse("x^2+x+1"), 9) == 3);
    CHECK(poly_order(BitPoly::parse("x^3+x+1"), 7) == 7);
    CHECK(poly_order(BitPoly::from_uint(0x13), 15) == 15);  // primitive
    CHECK(poly_order(BitPoly::from_uint(0x1f), 15) == 5);   // irreducible, not primitive
    // Products: order is the lcm over the irreducible factors.
    const BitPoly prod = BitPoly::parse("x^2+x+1") * BitPoly::parse("x^3+x+1");
    CHECK(poly_order(prod, 21) == 21);
    CHECK_THROWS_AS(poly_order(BitPoly::parse("x^2+x"), 7), std::invalid_argument);
    CHECK_THROWS_AS(poly_order(BitPoly::one(), 7), std::invalid_argument);
    CHECK_THROWS_AS(poly_order(BitPoly::parse("x^2+x+1"), 5), std::invalid_argument);
}

TEST_CASE("bounded polynomial order") {
    CHECK(poly_order_bounded(BitPoly::parse("x^2+x+1"), 10) == 3);
    CHECK(poly_order_bounded(BitPoly::from_uint(0x13)) == 15);
    CHECK_THROWS(poly_order_bounded(BitPoly::from_uint(0x13), 10));
}

TEST_CASE("order of minimal polynomials follows the root order") {
    // ord(minpoly of beta^j) = multiplicative order of beta^j = n / gcd(n, j).
    const Field f6(6);
    const uint64_t n = 63;
    for (uint64_t j = 1; j < n; ++j) {
        const BitPoly m = minimal_polynomial(j, f6, f6.alpha(), n);
        CHECK(poly_order(m, n) == n / std::gcd(n, j));
    }
}
