#include "qsyncgeo/bitpoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qsyncgeo {

namespace {

void check_degree(long d) {
    if (d > BitPoly::max_degree)
        throw std::length_error("polynomial degree " + std::to_string(d) + " exceeds cap " +
                                std::to_string(BitPoly::max_degree));
}

}  // namespace

void BitPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly BitPoly::one() {
    BitPoly p;
    p.words_ = {1};
    return p;
}

BitPoly BitPoly::monomial(long e) {
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    check_degree(e);
    BitPoly p;
    p.words_.resize(static_cast<size_t>(e / 64) + 1, 0);
    p.words_.back() = uint64_t{1} << (e % 64);
    return p;
}

BitPoly BitPoly::x_pow_n_plus_one(long n) {
    if (n < 1) throw std::invalid_argument("x_pow_n_plus_one: n must be >= 1");
    BitPoly p = monomial(n);
    p.words_[0] |= 1;
    return p;
}

BitPoly BitPoly::from_words(std::vector<uint64_t> w, long nbits) {
    if (nbits < 0 || (!w.empty() && nbits > static_cast<long>(w.size()) * 64))
        throw std::invalid_argument("from_words: bit count outside the word buffer");
    check_degree(nbits - 1);
    BitPoly p;
    p.words_ = std::move(w);
    p.words_.resize(static_cast<size_t>((nbits + 63) / 64));
    if (nbits % 64 && !p.words_.empty()) p.words_.back() &= ~uint64_t{0} >> (64 - nbits % 64);
    p.trim();
    return p;
}

BitPoly BitPoly::from_uint(uint64_t bits) {
    BitPoly p;
    if (bits) p.words_ = {bits};
    return p;
}

long BitPoly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<long>(words_.size()) * 64 - 1 - std::countl_zero(words_.back());
}

bool BitPoly::bit(long i) const {
    if (i < 0 || static_cast<size_t>(i / 64) >= words_.size()) return false;
    return (words_[static_cast<size_t>(i / 64)] >> (i % 64)) & 1;
}

void BitPoly::set_bit(long i) {
    if (i < 0) throw std::invalid_argument("set_bit: negative exponent");
    check_degree(i);
    if (static_cast<size_t>(i / 64) >= words_.size()) words_.resize(static_cast<size_t>(i / 64) + 1, 0);
    words_[static_cast<size_t>(i / 64)] |= uint64_t{1} << (i % 64);
}

long BitPoly::weight() const {
    long w = 0;
    for (uint64_t x : words_) w += std::popcount(x);
    return w;
}

BitPoly& BitPoly::operator+=(const BitPoly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

// acc ^= src << shift, growing acc as needed.
void xor_shifted(std::vector<uint64_t>& acc, const std::vector<uint64_t>& src, long shift) {
    const size_t ws = static_cast<size_t>(shift / 64);
    const int bs = static_cast<int>(shift % 64);
    const size_t need = src.size() + ws + (bs ? 1 : 0);
    if (acc.size() < need) acc.resize(need, 0);
    if (bs == 0) {
        for (size_t i = 0; i < src.size(); ++i) acc[i + ws] ^= src[i];
    } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < src.size(); ++i) {
            acc[i + ws] ^= (src[i] << bs) | carry;
            carry = src[i] >> (64 - bs);
        }
        acc[src.size() + ws] ^= carry;
    }
}

BitPoly poly_mul(const BitPoly& a, const BitPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_degree(a.degree() + b.degree());
    // Drive the loop from the sparser operand: cost is weight(lo) * words(hi).
    const BitPoly& hi = (a.weight() >= b.weight()) ? a : b;
    const BitPoly& lo = (a.weight() >= b.weight()) ? b : a;
    std::vector<uint64_t> acc(static_cast<size_t>((a.degree() + b.degree()) / 64) + 1, 0);
    const auto& lw = lo.words();
    for (size_t wi = 0; wi < lw.size(); ++wi) {
        uint64_t w = lw[wi];
        while (w) {
            int b0 = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(acc, hi.words(), static_cast<long>(wi) * 64 + b0);
        }
    }
    return BitPoly::from_words(std::move(acc), a.degree() + b.degree() + 1);
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) { return poly_mul(a, b); }

BitPoly BitPoly::shifted(long s) const {
    if (s < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero()) return {};
    check_degree(degree() + s);
    std::vector<uint64_t> acc;
    xor_shifted(acc, words_, s);
    return from_words(std::move(acc), degree() + s + 1);
}

BitPoly BitPoly::square() const {
    // Interleave zeros between the bits: (sum x^i)^2 = sum x^{2i} over GF(2).
    static const auto spread = [] {
        std::array<uint16_t, 256> t{};
        for (int v = 0; v < 256; ++v) {
            uint16_t s = 0;
            for (int i = 0; i < 8; ++i)
                if (v >> i & 1) s |= uint16_t(1) << (2 * i);
            t[static_cast<size_t>(v)] = s;
        }
        return t;
    }();
    if (is_zero()) return {};
    check_degree(2 * degree());
    std::vector<uint64_t> acc(words_.size() * 2, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        uint64_t lo = 0, hia = 0;
        for (int byte = 0; byte < 4; ++byte) lo |= uint64_t(spread[(w >> (8 * byte)) & 0xff]) << (16 * byte);
        for (int byte = 4; byte < 8; ++byte) hia |= uint64_t(spread[(w >> (8 * byte)) & 0xff]) << (16 * (byte - 4));
        acc[2 * i] = lo;
        acc[2 * i + 1] = hia;
    }
    return from_words(std::move(acc), 2 * degree() + 1);
}

BitPoly BitPoly::reciprocal() const {
    if (is_zero()) return {};
    const long d = degree();
    BitPoly r;
    r.words_.resize(static_cast<size_t>(d / 64) + 1, 0);
    for (long i = 0; i <= d; ++i)
        if (bit(i)) r.words_[static_cast<size_t>((d - i) / 64)] |= uint64_t{1} << ((d - i) % 64);
    r.trim();
    return r;
}

std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly& a, const BitPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const long db = b.degree();
    long da = a.degree();
    if (da < db) return {BitPoly{}, a};
    BitPoly q;
    q.words_.resize(static_cast<size_t>((da - db) / 64) + 1, 0);
    std::vector<uint64_t> r = a.words();
    for (long d = da; d >= db; --d) {
        if ((r[static_cast<size_t>(d / 64)] >> (d % 64)) & 1) {
            q.words_[static_cast<size_t>((d - db) / 64)] |= uint64_t{1} << ((d - db) % 64);
            xor_shifted(r, b.words(), d - db);
        }
    }
    q.trim();
    return {std::move(q), BitPoly::from_words(std::move(r), db)};
}

BitPoly poly_mod(const BitPoly& a, const BitPoly& b) { return poly_divmod(a, b).second; }

bool divides(const BitPoly& divisor, const BitPoly& dividend) {
    if (divisor.is_zero()) return dividend.is_zero();
    return poly_mod(dividend, divisor).is_zero();
}

BitPoly poly_modexp(uint64_t exp, const BitPoly& modulus) {
    if (modulus.is_zero()) throw std::domain_error("poly_modexp: zero modulus");
    if (modulus.degree() == 0) return {};  // everything is 0 mod a unit
    BitPoly r = BitPoly::one();
    // Left-to-right binary powering of the base x: square, then shift in an x.
    for (int i = 63 - std::countl_zero(exp | 1); i >= 0; --i) {
        r = poly_mod(r.square(), modulus);
        if ((exp >> i) & 1) {
            r = r.shifted(1);
            if (r.degree() == modulus.degree()) r += modulus;
        }
    }
    return r;
}

std::string BitPoly::to_hex() const {
    if (is_zero()) return "0x0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool lead = true;
    for (size_t i = words_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            int v = static_cast<int>((words_[i] >> (4 * nib)) & 0xf);
            if (lead && v == 0) continue;
            lead = false;
            out.push_back(digits[v]);
        }
    }
    return "0x" + out;
}

std::string BitPoly::to_sparse() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (!bit(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

namespace {

BitPoly parse_hex(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse: empty hex polynomial");
    std::vector<uint64_t> words((s.size() + 15) / 16, 0);
    long nbits = static_cast<long>(s.size()) * 4;
    check_degree(nbits - 1);
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[s.size() - 1 - i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument(std::string("parse: bad hex digit '") + c + "'");
        words[i / 16] |= uint64_t(v) << (4 * (i % 16));
    }
    return BitPoly::from_words(std::move(words), nbits);
}

BitPoly parse_sparse(std::string_view s) {
    BitPoly p;
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        if (next == std::string_view::npos) next = s.size();
        std::string_view term = s.substr(pos, next - pos);
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) term.remove_prefix(1);
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
        if (term.empty()) throw std::invalid_argument("parse: empty term in polynomial");
        long e;
        if (term == "0" && !any && next == s.size() && pos == 0) return {};
        if (term == "1") e = 0;
        else if (term == "x") e = 1;
        else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            auto digits = term.substr(2);
            auto res = std::from_chars(digits.data(), digits.data() + digits.size(), e);
            if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() || e < 0)
                throw std::invalid_argument("parse: bad exponent in '" + std::string(term) + "'");
        } else {
            throw std::invalid_argument("parse: bad term '" + std::string(term) + "'");
        }
        if (p.bit(e)) throw std::invalid_argument("parse: duplicate exponent " + std::to_string(e));
        p.set_bit(e);
        any = true;
        pos = next + 1;
    }
    if (!any) throw std::invalid_argument("parse: empty polynomial text");
    return p;
}

}  // namespace

BitPoly BitPoly::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) return parse_hex(text.substr(2));
    return parse_sparse(text);
}

}  // namespace qsyncgeo
