#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsyncgeo/bitpoly.hpp"
#include "qsyncgeo/geomcodes.hpp"

namespace qsyncgeo {

// Binary cyclic code of length n: the ideal generated by g in F_2[x]/(x^n+1).
// All generators here have g(0) = 1, so gcd(g, x) = 1 throughout.
struct CyclicCode {
    uint64_t n = 0;
    BitPoly g;
    uint64_t k = 0;  // n - deg g
};

CyclicCode code_from_generator(uint64_t n, BitPoly g);  // requires g | x^n + 1

// Membership: g divides the word polynomial (degree < n).
bool contains_word(const CyclicCode& c, const BitPoly& word);

// word * x^s reduced mod x^n + 1.
BitPoly cyclic_shift(const BitPoly& word, uint64_t n, uint64_t s);

// Dense GF(2) matrix, rows bit-packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(size_t rows, size_t cols);
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }
    uint64_t* row(size_t r) { return words_.data() + r * wpr_; }
    const uint64_t* row(size_t r) const { return words_.data() + r * wpr_; }
    bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(size_t r, size_t c) { row(r)[c >> 6] |= uint64_t{1} << (c & 63); }

private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> words_;
};

BitMatrix generator_matrix(const CyclicCode& c);  // k x n, row i = x^i g

// Row rank by bit-parallel elimination; takes its argument by value and
// destroys the copy.
size_t rank_gf2(BitMatrix m);

enum class DualCheckRoute { automatic, matrix, polynomial };

// Whether the dual code is contained in the code. The polynomial route checks
// that g divides the reciprocal of (x^n+1)/g (the dual's generator); the matrix
// route checks that the dual's generator matrix is self-orthogonal row by row.
// `automatic` uses the matrix route up to n = 2^12 and polynomials above; an
// explicit matrix request past n = 2^16 is refused.
bool is_dual_containing(const CyclicCode& c, DualCheckRoute route = DualCheckRoute::automatic);

bool is_subcode(const CyclicCode& inner, const CyclicCode& outer);  // outer.g | inner.g

// 1 + the longest cyclic run of consecutive residues mod n present in the root
// set, over every starting point. Empty set gives 1.
uint64_t bch_bound(const IndexSet& roots);

struct DistanceOptions {
    uint64_t exhaustive_k_cap = 26;
    uint64_t weight_search_cap = 4;                       // clamped to 4 internally
    uint64_t pair_search_n_cap = uint64_t{1} << 13;       // weight-4 search is O(n^2)
    std::optional<BitPoly> witness;                       // known nonzero codeword
    std::optional<uint64_t> lower_bound;                  // proven bound, e.g. bch_bound
};

struct DistanceReport {
    uint64_t value = 0;      // exact when certified, else best upper bound
    uint64_t lower = 1;      // proven lower bound
    std::string method;      // exhaustive | weight_search(w) | witness+bound | interval
    bool certified = false;
    double elapsed_ms = 0.0;
};

std::string distance_report_json(const DistanceReport& r);

// Strategy ladder: witness-guided bounded-weight search when every weight below
// the witness is coverable, else exhaustive sweep when k is small, else plain
// bounded-weight search, else bound-meets-witness; an uncertified [lower, upper]
// interval when everything runs out.
DistanceReport min_distance(const CyclicCode& c, const DistanceOptions& opt = {});

// Full 2^k - 1 codeword sweep in Gray-code order (one row xor per step). The
// serial kernel is the reference the parallel one is checked against; both
// return the same minimum by construction (min is order-free).
uint64_t min_weight_exhaustive(const CyclicCode& c);
uint64_t min_weight_exhaustive_serial(const CyclicCode& c);

// Bounded-weight membership search, weights 1..min(limit,4) in order. Stops at
// the first infeasible weight (degree or length past the caps), so `found`, when
// nonzero, is the exact minimum weight and every weight <= excluded_up_to is
// exhaustively ruled out.
struct WeightSearchResult {
    uint64_t found = 0;
    uint64_t excluded_up_to = 0;
};
WeightSearchResult weight_search(const CyclicCode& c, uint64_t limit,
                                 uint64_t pair_search_n_cap = uint64_t{1} << 13);

}  // namespace qsyncgeo
