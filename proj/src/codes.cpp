#include "qsyncgeo/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsyncgeo {

CyclicCode code_from_generator(uint64_t n, BitPoly g) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("code length must be odd and positive");
    if (g.is_zero() || static_cast<uint64_t>(g.degree()) > n)
        throw std::invalid_argument("generator degree out of range");
    if (!divides(g, BitPoly::x_pow_n_plus_one(static_cast<long>(n))))
        throw std::invalid_argument("generator does not divide x^n + 1");
    CyclicCode c;
    c.n = n;
    c.k = n - static_cast<uint64_t>(g.degree());
    c.g = std::move(g);
    return c;
}

bool contains_word(const CyclicCode& c, const BitPoly& word) {
    if (word.degree() >= static_cast<long>(c.n))
        throw std::invalid_argument("word degree exceeds the code length");
    return poly_mod(word, c.g).is_zero();
}

BitPoly cyclic_shift(const BitPoly& word, uint64_t n, uint64_t s) {
    if (word.degree() >= static_cast<long>(n))
        throw std::invalid_argument("word degree exceeds the length");
    return poly_mod(word.shifted(static_cast<long>(s % n)),
                    BitPoly::x_pow_n_plus_one(static_cast<long>(n)));
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (cols == 0) throw std::invalid_argument("matrix needs at least one column");
    if (rows_ > 0 && wpr_ > (size_t{1} << 27) / rows_)  // caps the backing store at 1 GiB
        throw std::invalid_argument("matrix dimensions too large");
    words_.assign(rows_ * wpr_, 0);
}

BitMatrix generator_matrix(const CyclicCode& c) {
    BitMatrix m(c.k, c.n);
    const auto& gw = c.g.words();
    for (size_t i = 0; i < c.k; ++i) {
        uint64_t* r = m.row(i);
        const size_t ws = i >> 6, bs = i & 63;
        for (size_t j = 0; j < gw.size(); ++j) {
            r[ws + j] ^= gw[j] << bs;
            if (bs && ws + j + 1 < m.words_per_row()) r[ws + j + 1] ^= gw[j] >> (64 - bs);
        }
    }
    return m;
}

size_t rank_gf2(BitMatrix m) {
    size_t rank = 0;
    const size_t wpr = m.words_per_row();
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t p = rank;
        while (p < m.rows() && !m.get(p, col)) ++p;
        if (p == m.rows()) continue;
        if (p != rank)
            for (size_t w = 0; w < wpr; ++w) std::swap(m.row(p)[w], m.row(rank)[w]);
        const uint64_t* piv = m.row(rank);
        for (size_t r = rank + 1; r < m.rows(); ++r)
            if (m.get(r, col)) {
                uint64_t* rw = m.row(r);
                for (size_t w = 0; w < wpr; ++w) rw[w] ^= piv[w];
            }
        ++rank;
    }
    return rank;
}

namespace {

// Parity of the intersection of v with v shifted right by delta bits.
bool shifted_and_parity(const std::vector<uint64_t>& v, uint64_t delta) {
    const size_t ws = delta >> 6, bs = delta & 63;
    uint64_t ones = 0;
    for (size_t i = 0; i + ws < v.size(); ++i) {
        uint64_t sh = v[i + ws] >> bs;
        if (bs && i + ws + 1 < v.size()) sh |= v[i + ws + 1] << (64 - bs);
        ones += static_cast<uint64_t>(std::popcount(v[i] & sh));
    }
    return ones & 1;
}

}  // namespace

bool is_dual_containing(const CyclicCode& c, DualCheckRoute route) {
    if (2 * c.k < c.n) return false;  // dual dimension n-k would not fit inside k
    if (route == DualCheckRoute::automatic)
        route = c.n <= (uint64_t{1} << 12) ? DualCheckRoute::matrix : DualCheckRoute::polynomial;
    const BitPoly h = poly_divmod(BitPoly::x_pow_n_plus_one(static_cast<long>(c.n)), c.g).first;
    const BitPoly hrev = h.reciprocal();  // the dual code's generator
    if (route == DualCheckRoute::polynomial) return divides(c.g, hrev);
    if (c.n > (uint64_t{1} << 16))
        throw std::invalid_argument(
            "length exceeds the matrix-route cap of 2^16; use the polynomial route");
    // Rows of the dual's generator matrix are x^i * hrev, i < n-k; with
    // i + deg hrev <= n-1 no row wraps, so row_i . row_j only depends on |i-j|.
    for (uint64_t delta = 0; delta < c.n - c.k; ++delta)
        if (shifted_and_parity(hrev.words(), delta)) return false;
    return true;
}

bool is_subcode(const CyclicCode& inner, const CyclicCode& outer) {
    if (inner.n != outer.n) throw std::invalid_argument("subcode check needs equal lengths");
    return divides(outer.g, inner.g);
}

uint64_t bch_bound(const IndexSet& roots) {
    if (roots.members.empty()) return 1;
    const uint64_t n = roots.n;
    std::vector<bool> present(n, false);
    for (uint64_t a : roots.members) present[a % n] = true;  // residue n stands for 0
    // Longest cyclic run: scan twice around, capped at n.
    uint64_t best = 0, run = 0;
    for (uint64_t i = 0; i < 2 * n; ++i) {
        if (present[i % n]) {
            if (++run > best) best = run;
        } else {
            run = 0;
        }
        if (best == n) break;
    }
    return std::min(best, n) + 1;
}

namespace {

// Residue register: value mod g, deg-g bits wide, with one step = multiply by x.
struct ModGRegister {
    const std::vector<uint64_t>& gw;
    long deg;
    std::vector<uint64_t> r;

    explicit ModGRegister(const BitPoly& g)
        : gw(g.words()), deg(g.degree()), r(gw.size(), 0) {
        r[0] = 1;  // x^0
    }
    void step() {
        for (size_t i = r.size(); i-- > 1;) r[i] = (r[i] << 1) | (r[i - 1] >> 63);
        r[0] <<= 1;
        if ((r[static_cast<size_t>(deg >> 6)] >> (deg & 63)) & 1)
            for (size_t i = 0; i < r.size(); ++i) r[i] ^= gw[i];
    }
    bool is_one() const {
        if (r[0] != 1) return false;
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i]) return false;
        return true;
    }
};

struct Residue128 {
    uint64_t lo = 0, hi = 0, exp = 0;
    friend bool operator<(const Residue128& a, const Residue128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

bool lookup(const std::vector<Residue128>& table, uint64_t lo, uint64_t hi) {
    Residue128 key{lo, hi, 0};
    auto it = std::lower_bound(table.begin(), table.end(), key);
    return it != table.end() && it->lo == lo && it->hi == hi;
}

}  // namespace

WeightSearchResult weight_search(const CyclicCode& c, uint64_t limit, uint64_t pair_search_n_cap) {
    WeightSearchResult res;
    limit = std::min<uint64_t>(limit, 4);
    if (limit < 1 || c.k == 0) return res;
    // Weight 1: x^a is a codeword iff g = 1 (g has a nonzero constant term).
    if (c.g.degree() == 0) {
        res.found = 1;
        return res;
    }
    res.excluded_up_to = 1;
    if (limit < 2) return res;
    // Weight 2: x^e + 1 is a codeword for some e < n iff x reaches 1 mod g early.
    ModGRegister reg(c.g);
    for (uint64_t e = 1; e < c.n; ++e) {
        reg.step();
        if (reg.is_one()) {
            res.found = 2;
            return res;
        }
    }
    res.excluded_up_to = 2;
    if (limit < 3) return res;
    // Weights 3 and 4 pattern-match on x^a mod g; the table keys need <= 128 bits.
    // With weight 2 excluded the n residues are pairwise distinct and nonzero.
    if (c.g.degree() > 128 || c.n > (uint64_t{1} << 20)) return res;
    std::vector<Residue128> table(c.n);
    {
        ModGRegister t(c.g);
        for (uint64_t a = 0; a < c.n; ++a) {
            table[a] = {t.r[0], t.r.size() > 1 ? t.r[1] : 0, a};
            t.step();
        }
    }
    std::vector<Residue128> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    // Weight 3: 1 + x^b + x^a with r_a = r_b ^ 1; any hit has a distinct from 0, b.
    for (uint64_t b = 1; b < c.n; ++b)
        if (lookup(sorted, table[b].lo ^ 1, table[b].hi)) {
            res.found = 3;
            return res;
        }
    res.excluded_up_to = 3;
    if (limit < 4) return res;
    if (c.n > pair_search_n_cap) return res;
    // Weight 4: 1 + x^e + x^b + x^a with r_a = r_b ^ r_e ^ 1; distinctness of the
    // residues makes any hit a valid fourth exponent.
    for (uint64_t b = 2; b < c.n; ++b)
        for (uint64_t e = 1; e < b; ++e)
            if (lookup(sorted, table[b].lo ^ table[e].lo ^ 1, table[b].hi ^ table[e].hi)) {
                res.found = 4;
                return res;
            }
    res.excluded_up_to = 4;
    return res;
}

namespace {

struct GrayRows {
    std::vector<std::vector<uint64_t>> rows;  // k generator-matrix rows
    size_t wpr = 0;

    explicit GrayRows(const CyclicCode& c) : wpr((c.n + 63) / 64) {
        rows.assign(c.k, std::vector<uint64_t>(wpr, 0));
        const auto& gw = c.g.words();
        for (uint64_t i = 0; i < c.k; ++i) {
            auto& r = rows[i];
            const size_t ws = i >> 6, bs = i & 63;
            for (size_t j = 0; j < gw.size(); ++j) {
                r[ws + j] ^= gw[j] << bs;
                if (bs && ws + j + 1 < wpr) r[ws + j + 1] ^= gw[j] >> (64 - bs);
            }
        }
    }
    // Codeword for a message index read as a plain bit mask.
    std::vector<uint64_t> expand(uint64_t msg) const {
        std::vector<uint64_t> cw(wpr, 0);
        while (msg) {
            const int b = std::countr_zero(msg);
            msg &= msg - 1;
            const auto& r = rows[static_cast<size_t>(b)];
            for (size_t j = 0; j < wpr; ++j) cw[j] ^= r[j];
        }
        return cw;
    }
    // Minimum weight over messages lo..hi in Gray order; the running codeword
    // after message m is always expand(m ^ (m >> 1)).
    uint64_t sweep(uint64_t lo, uint64_t hi) const {
        std::vector<uint64_t> cw = expand((lo - 1) ^ ((lo - 1) >> 1));
        uint64_t best = UINT64_MAX;
        for (uint64_t m = lo; m <= hi; ++m) {
            const auto& r = rows[static_cast<size_t>(std::countr_zero(m))];
            uint64_t w = 0;
            for (size_t j = 0; j < wpr; ++j) {
                cw[j] ^= r[j];
                w += static_cast<uint64_t>(std::popcount(cw[j]));
            }
            if (w < best) best = w;
        }
        return best;
    }
};

void check_exhaustive_range(const CyclicCode& c) {
    if (c.k < 1 || c.k > 32)
        throw std::invalid_argument("exhaustive sweep needs 1 <= k <= 32");
}

}  // namespace

uint64_t min_weight_exhaustive_serial(const CyclicCode& c) {
    check_exhaustive_range(c);
    GrayRows g(c);
    return g.sweep(1, (uint64_t{1} << c.k) - 1);
}

uint64_t min_weight_exhaustive(const CyclicCode& c) {
    check_exhaustive_range(c);
#ifdef _OPENMP
    const uint64_t total = (uint64_t{1} << c.k) - 1;
    const int nt = omp_get_max_threads();
    if (nt > 1 && c.k >= 18) {
        GrayRows g(c);
        uint64_t best = UINT64_MAX;
#pragma omp parallel num_threads(nt) reduction(min : best)
        {
            const int tid = omp_get_thread_num();
            const uint64_t lo = 1 + total * static_cast<uint64_t>(tid) / static_cast<uint64_t>(nt);
            const uint64_t hi = total * (static_cast<uint64_t>(tid) + 1) / static_cast<uint64_t>(nt);
            if (lo <= hi) best = g.sweep(lo, hi);
        }
        return best;
    }
#endif
    return min_weight_exhaustive_serial(c);
}

std::string distance_report_json(const DistanceReport& r) {
    return nlohmann::json{{"value", r.value},
                          {"method", r.method},
                          {"certified", r.certified},
                          {"elapsed_ms", r.elapsed_ms}}
        .dump();
}

DistanceReport min_distance(const CyclicCode& c, const DistanceOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    if (c.k == 0) throw std::invalid_argument("minimum distance undefined for the zero code");
    uint64_t lower = std::max<uint64_t>(1, opt.lower_bound.value_or(1));
    uint64_t upper = static_cast<uint64_t>(c.g.weight());  // g itself is a codeword
    uint64_t witness_wt = 0;
    if (opt.witness) {
        if (opt.witness->is_zero() || !contains_word(c, *opt.witness))
            throw std::invalid_argument("witness is not a nonzero codeword");
        witness_wt = static_cast<uint64_t>(opt.witness->weight());
        upper = std::min(upper, witness_wt);
    }
    DistanceReport rep;
    const auto finish = [&](uint64_t value, uint64_t lo, std::string method, bool cert) {
        rep.value = value;
        rep.lower = lo;
        rep.method = std::move(method);
        rep.certified = cert;
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    };
    const auto found_by_search = [&](uint64_t w) {
        return finish(w, w, "weight_search(" + std::to_string(w) + ")", true);
    };
    bool searched = false;
    if (witness_wt >= 1 && witness_wt - 1 <= opt.weight_search_cap) {
        const auto ws = weight_search(c, witness_wt - 1, opt.pair_search_n_cap);
        searched = true;
        if (ws.found) return found_by_search(ws.found);
        lower = std::max(lower, ws.excluded_up_to + 1);
        if (ws.excluded_up_to == witness_wt - 1)
            return finish(witness_wt, witness_wt, "witness+bound", true);
    }
    if (c.k <= opt.exhaustive_k_cap) {
        const uint64_t d = min_weight_exhaustive(c);
        return finish(d, d, "exhaustive", true);
    }
    if (!searched && opt.weight_search_cap >= 1) {
        const auto ws = weight_search(c, opt.weight_search_cap, opt.pair_search_n_cap);
        if (ws.found) return found_by_search(ws.found);
        lower = std::max(lower, ws.excluded_up_to + 1);
    }
    if (lower > upper)
        throw std::logic_error("claimed lower bound exceeds a realized codeword weight");
    if (lower == upper) return finish(upper, lower, "witness+bound", true);
    return finish(upper, lower, "interval", false);
}

}  // namespace qsyncgeo
