#include "qsyncgeo/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsyncgeo {

std::vector<uint64_t> cyclotomic_coset(uint64_t j, uint64_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic cosets need odd modulus");
    j %= n;
    std::vector<uint64_t> orbit;
    uint64_t c = j;
    do {
        orbit.push_back(c);
        c = (2 * c) % n;
    } while (c != j);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<uint64_t> divisors_of(uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<std::pair<uint64_t, int>> fac;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) m /= p, ++e;
        fac.emplace_back(p, e);
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<uint64_t> divs{1};
    for (auto [p, e] : fac) {
        size_t base = divs.size();
        uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BitPoly minimal_polynomial(uint64_t j, const Field& f, uint64_t beta, uint64_t n) {
    // Coefficients live in the big field while the product is assembled.
    std::vector<uint64_t> coeff{1};
    for (uint64_t c : cyclotomic_coset(j, n)) {
        const uint64_t r = f.pow(beta, static_cast<int64_t>(c));
        coeff.push_back(0);
        for (size_t d = coeff.size() - 1; d > 0; --d)
            coeff[d] = coeff[d - 1] ^ f.mul(coeff[d], r);
        coeff[0] = f.mul(coeff[0], r);
    }
    BitPoly out;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 1)
            throw std::logic_error(
                "minimal polynomial has a coefficient outside GF(2); "
                "the given element does not have order " +
                std::to_string(n));
        if (coeff[i]) out.set_bit(static_cast<long>(i));
    }
    return out;
}

uint64_t poly_order(const BitPoly& f, uint64_t multiple) {
    if (f.degree() < 1) throw std::invalid_argument("polynomial order needs degree >= 1");
    if (!f.constant_term()) throw std::invalid_argument("polynomial order undefined: x divides f");
    if (poly_modexp(multiple, f) != BitPoly::one())
        throw std::invalid_argument("order of x does not divide the given multiple");
    // Strip each prime out of `multiple` while x^(ord/p) stays 1.
    uint64_t ord = multiple, rest = multiple;
    auto strip = [&](uint64_t p) {
        while (ord % p == 0 && poly_modexp(ord / p, f) == BitPoly::one()) ord /= p;
    };
    for (uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        strip(p);
    }
    if (rest > 1) strip(rest);
    return ord;
}

uint64_t poly_order_bounded(const BitPoly& f, uint64_t cap) {
    if (f.degree() < 1) throw std::invalid_argument("polynomial order needs degree >= 1");
    if (!f.constant_term()) throw std::invalid_argument("polynomial order undefined: x divides f");
    BitPoly r = poly_mod(BitPoly::monomial(1), f);  // x^e mod f, e = 1 at loop entry
    for (uint64_t e = 1; e <= cap; ++e) {
        if (r == BitPoly::one()) return e;
        r = poly_mod(r.shifted(1), f);
    }
    throw std::runtime_error("order of x exceeds the search cap");
}

}  // namespace qsyncgeo
