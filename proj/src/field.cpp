#include "qsyncgeo/field.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsyncgeo {

namespace {

// Smallest primitive polynomial per degree, frozen from an exhaustive search over
// ascending coefficient vectors; re-verified by is_primitive() whenever a Field is
// built and exhaustively re-derived in the unit tests for the low degrees.
constexpr std::array<uint64_t, PrimitivePolyTable::max_degree + 1> canonical_mods = {
    0,          0x3,        0x7,        0xb,        0x13,       0x25,        0x43,       0x83,
    0x11d,      0x211,      0x409,      0x805,      0x1053,     0x201b,      0x402b,     0x8003,
    0x1002d,    0x20009,    0x40027,    0x80027,    0x100009,   0x200005,    0x400003,   0x800021,
    0x100001b,  0x2000009,  0x4000047,  0x8000027,  0x10000009, 0x20000005,  0x40000053, 0x80000009,
    0x1000000af};

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool is_primitive(const BitPoly& f) {
    const long e = f.degree();
    if (e < 1 || e > 62 || !f.constant_term()) return false;
    const uint64_t N = (uint64_t{1} << e) - 1;
    if (poly_modexp(N, f) != BitPoly::one()) return false;
    for (uint64_t p : prime_factors(N))
        if (poly_modexp(N / p, f) == BitPoly::one()) return false;
    return true;
}

PrimitivePolyTable::PrimitivePolyTable() : mods_(canonical_mods) {}

const PrimitivePolyTable& PrimitivePolyTable::builtin() {
    static const PrimitivePolyTable t;
    return t;
}

PrimitivePolyTable PrimitivePolyTable::with_overrides_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open override file: " + path);
    PrimitivePolyTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int degree;
        std::string poly;
        if (!(ls >> degree))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected a degree");
        if (!(ls >> poly))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing polynomial");
        if (degree < 1 || degree > max_degree)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": degree out of range");
        BitPoly p = BitPoly::parse(poly);
        if (p.degree() != degree)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": polynomial degree " +
                                     std::to_string(p.degree()) + " does not match declared " +
                                     std::to_string(degree));
        uint64_t bits = 0;
        for (long i = 0; i <= p.degree(); ++i)
            if (p.bit(i)) bits |= uint64_t{1} << i;
        t.mods_[static_cast<size_t>(degree)] = bits;
        t.overridden_[static_cast<size_t>(degree)] = true;
    }
    return t;
}

uint64_t PrimitivePolyTable::modulus_bits(int degree) const {
    if (degree < 1 || degree > max_degree)
        throw std::invalid_argument("no modulus for degree " + std::to_string(degree) +
                                    " (supported: 1.." + std::to_string(max_degree) + ")");
    return mods_[static_cast<size_t>(degree)];
}

BitPoly PrimitivePolyTable::modulus(int degree) const {
    return BitPoly::from_uint(modulus_bits(degree));
}

Field::Field(int degree, const PrimitivePolyTable& polys) : Field(degree, polys.modulus_bits(degree)) {}

Field::Field(int degree, uint64_t modulus_bits) : e_(degree), mod_(modulus_bits) {
    if (degree < 1 || degree > PrimitivePolyTable::max_degree)
        throw std::invalid_argument("field degree out of range: " + std::to_string(degree));
    BitPoly m = BitPoly::from_uint(modulus_bits);
    if (m.degree() != degree) throw std::invalid_argument("field modulus degree mismatch");
    if (!is_primitive(m))
        throw std::invalid_argument("field modulus " + m.to_sparse() + " is not primitive");
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> e_) & 1) a ^= mod_;
    }
    return r;
}

uint64_t Field::pow(uint64_t a, int64_t k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw std::domain_error("field_pow: negative power of zero");
        return 0;
    }
    const int64_t n = static_cast<int64_t>(order());
    int64_t kr = k % n;
    if (kr < 0) kr += n;
    uint64_t r = 1;
    while (kr) {
        if (kr & 1) r = mul(r, a);
        a = mul(a, a);
        kr >>= 1;
    }
    return r;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    return pow(a, -1);
}

uint64_t Field::trace(uint64_t a) const {
    uint64_t s = 0, y = a;
    for (int i = 0; i < e_; ++i) {
        s ^= y;
        y = mul(y, y);
    }
    return s;  // lands in {0,1}: fixed by Frobenius
}

uint64_t Field::eval(const BitPoly& p, uint64_t x) const {
    uint64_t r = 0;
    for (long i = p.degree(); i >= 0; --i) {
        r = mul(r, x);
        if (p.bit(i)) r ^= 1;
    }
    return r;
}

uint64_t field_pow(const Field& f, uint64_t base, int64_t exp) { return f.pow(base, exp); }

uint64_t subfield_generator_image(const Field& small, const Field& big) {
    if (big.degree() % small.degree() != 0)
        throw std::invalid_argument("subfield embedding requires small degree | big degree");
    const uint64_t step = big.order() / small.order();
    const uint64_t gamma = big.pow(big.alpha(), static_cast<int64_t>(step));
    const BitPoly m = BitPoly::from_uint(small.modulus_bits());
    for (uint64_t k = 0; k < small.order(); ++k) {
        uint64_t cand = big.pow(gamma, static_cast<int64_t>(k));
        if (big.eval(m, cand) == 0) return cand;
    }
    throw std::logic_error("no root of the small modulus in the big field");  // unreachable
}

}  // namespace qsyncgeo
