// Acceptance gate: runs the release criteria end to end and prints one
// PASS/FAIL line per criterion. Exit status 0 only when every line passes.
// --include-huge unlocks the n = 2^24 - 1 rows in the Euclidean table check.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsyncgeo/algebra.hpp"
#include "qsyncgeo/codes.hpp"
#include "qsyncgeo/geomcodes.hpp"
#include "qsyncgeo/geometry.hpp"
#include "qsyncgeo/qsync.hpp"
#include "qsyncgeo/verify.hpp"

using namespace qsyncgeo;

namespace {

uint64_t p2(int e) { return uint64_t{1} << e; }

double secs(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string d) { return {true, std::move(d)}; }
Outcome bad(std::string d) { return {false, std::move(d)}; }

std::string tag(const GeometryCodeSpec& s) {
    std::ostringstream o;
    o << family_name(s.family) << "(" << s.m << "," << s.h << "," << s.t << ")";
    return o.str();
}

// Generators and index sets are shared across criteria; both are deterministic.
struct Cache {
    std::map<std::array<int, 4>, IndexSet> isets;
    std::map<std::array<int, 4>, BitPoly> gens;

    static std::array<int, 4> key(const GeometryCodeSpec& s) {
        return {s.family == Family::PG ? 0 : 1, s.m, s.h, s.t};
    }
    const IndexSet& iset(const GeometryCodeSpec& s) {
        auto [it, fresh] = isets.try_emplace(key(s));
        if (fresh) it->second = index_set(s);
        return it->second;
    }
    const BitPoly& gen(const GeometryCodeSpec& s) {
        auto [it, fresh] = gens.try_emplace(key(s));
        if (fresh) it->second = generator_poly(s);
        return it->second;
    }
};

Cache cache;

// ---- criterion 1: projective parameter table, two independent k paths ----

Outcome criterion1() {
    const auto check_row = [&](const ReferenceRow& row) -> std::string {
        const CodeParams p = params(row.spec);
        if (p.n != row.n || p.k != row.k || p.d != row.d)
            return "formula params differ at " + tag(row.spec);
        const IndexSet& I = cache.iset(row.spec);
        if (I.n != row.n || row.n - I.members.size() != row.k)
            return "index-set dimension differs at " + tag(row.spec);
        if (static_cast<uint64_t>(cache.gen(row.spec).degree()) != row.n - row.k)
            return "generator degree differs at " + tag(row.spec);
        return "";
    };
    const auto t0 = std::chrono::steady_clock::now();
    int small = 0;
    for (const ReferenceRow& row : reference_rows(Family::PG)) {
        if (row.n > 5461) continue;
        if (std::string e = check_row(row); !e.empty()) return bad(e);
        ++small;
    }
    const double small_s = secs(t0);
    int rest = 0;
    for (const ReferenceRow& row : reference_rows(Family::PG)) {
        if (row.n <= 5461) continue;
        if (std::string e = check_row(row); !e.empty()) return bad(e);
        ++rest;
    }
    const double total_s = secs(t0);
    if (small_s >= 30.0) return bad("n<=5461 subset took " + fmt_s(small_s) + " (budget 30s)");
    if (total_s >= 300.0) return bad("full table took " + fmt_s(total_s) + " (budget 5min)");
    return ok(std::to_string(small + rest) +
              " rows agree via closed formula, index-set count, and generator degree; n<=5461 in " +
              fmt_s(small_s) + ", all in " + fmt_s(total_s));
}

// ---- criterion 2: Euclidean parameter table ----

Outcome criterion2(bool include_huge) {
    const auto t0 = std::chrono::steady_clock::now();
    int normal = 0;
    for (const ReferenceRow& row : reference_rows(Family::EG)) {
        if (row.n > p2(21)) continue;
        const CodeParams p = params(row.spec);
        if (p.n != row.n || p.k != row.k || p.d != row.d)
            return bad("formula params differ at " + tag(row.spec));
        const IndexSet& I = cache.iset(row.spec);
        if (I.n != row.n || row.n - I.members.size() != row.k)
            return bad("index-set dimension differs at " + tag(row.spec));
        ++normal;
    }
    const double normal_s = secs(t0);
    if (normal_s >= 120.0)
        return bad("n<=2^21 rows took " + fmt_s(normal_s) + " (budget 2min)");
    if (!include_huge)
        return ok(std::to_string(normal) + " rows with n<=2^21 agree in " + fmt_s(normal_s) +
                  "; n=16777215 rows skipped (pass --include-huge)");
    const auto t1 = std::chrono::steady_clock::now();
    int huge = 0;
    for (const ReferenceRow& row : reference_rows(Family::EG)) {
        if (row.n <= p2(21)) continue;
        const CodeParams p = params(row.spec);
        if (p.n != row.n || p.k != row.k || p.d != row.d)
            return bad("formula params differ at " + tag(row.spec));
        const IndexSet I = index_set(row.spec);  // too large to keep cached
        if (I.n != row.n || row.n - I.members.size() != row.k)
            return bad("index-set dimension differs at " + tag(row.spec));
        ++huge;
    }
    const double huge_s = secs(t1);
    if (huge_s >= 1200.0)
        return bad("n=16777215 rows took " + fmt_s(huge_s) + " (budget 20min)");
    return ok(std::to_string(normal) + " rows with n<=2^21 agree in " + fmt_s(normal_s) + "; all " +
              std::to_string(huge) + " rows at n=16777215 agree in " + fmt_s(huge_s));
}

// ---- criterion 3: exhaustive / witness minimum distances at n = 31 ----

Outcome criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const CyclicCode c16 = code_from_generator(31, cache.gen({Family::PG, 4, 1, 2}));
    const DistanceReport ex = min_distance(c16);
    const double ex_s = secs(t0);
    if (ex.value != 7 || !ex.certified || ex.method != "exhaustive")
        return bad("[31,16] reported d=" + std::to_string(ex.value) + " via " + ex.method);
    if (ex_s >= 10.0) return bad("[31,16] sweep took " + fmt_s(ex_s) + " (budget 10s)");

    const auto t1 = std::chrono::steady_clock::now();
    const CyclicCode c26 = code_from_generator(31, cache.gen({Family::PG, 4, 1, 3}));
    DistanceOptions opt;
    opt.witness = c26.g;  // the weight-3 generator itself
    const DistanceReport wb = min_distance(c26, opt);
    const double wb_s = secs(t1);
    if (wb.value != 3 || !wb.certified || wb.method != "witness+bound")
        return bad("[31,26] reported d=" + std::to_string(wb.value) + " via " + wb.method);
    if (wb_s >= 10.0) return bad("[31,26] search took " + fmt_s(wb_s) + " (budget 10s)");
    return ok("[31,16] -> 7 (exhaustive, " + fmt_s(ex_s) + "), [31,26] -> 3 (witness+bound, " +
              fmt_s(wb_s) + ")");
}

// ---- criterion 4: Euclidean witnesses and the consecutive-root bound ----

Outcome criterion4() {
    int rows = 0;
    for (const ReferenceRow& row : reference_rows(Family::EG)) {
        if (row.n > p2(16)) continue;
        const GeometryModel model(Family::EG, row.spec.m, row.spec.h);
        const IncidenceVector w = eg_min_weight_support(model, row.spec.t);
        if (w.weight() != row.d)
            return bad("witness weight " + std::to_string(w.weight()) + " != d at " +
                       tag(row.spec));
        const CyclicCode c = code_from_generator(row.n, cache.gen(row.spec));
        if (!contains_word(c, w.to_poly()))
            return bad("witness not in the code at " + tag(row.spec));
        if (bch_bound(cache.iset(row.spec)) != row.d)
            return bad("consecutive-root bound != d at " + tag(row.spec));
        ++rows;
    }
    return ok(std::to_string(rows) +
              " rows: hyperoval-coset witness has weight d, lies in the code, and the "
              "consecutive-root bound certifies d");
}

// ---- criterion 5: projective subspace witnesses ----

Outcome criterion5() {
    int rows = 0;
    for (const ReferenceRow& row : reference_rows(Family::PG)) {
        if (row.n > 5461) continue;
        const GeometryModel model(Family::PG, row.spec.m, row.spec.h);
        const IncidenceVector w = pg_min_weight_support(model, row.spec.t);
        const uint64_t expect =
            (p2(row.spec.h * (row.spec.m - row.spec.t + 1)) - 1) / (p2(row.spec.h) - 1);
        if (expect != row.d) return bad("distance formula mismatch at " + tag(row.spec));
        if (w.weight() != expect)
            return bad("witness weight " + std::to_string(w.weight()) + " != " +
                       std::to_string(expect) + " at " + tag(row.spec));
        const CyclicCode c = code_from_generator(row.n, cache.gen(row.spec));
        if (!contains_word(c, w.to_poly()))
            return bad("witness not in the code at " + tag(row.spec));
        ++rows;
    }
    return ok(std::to_string(rows) + " rows: subspace witness has weight d and lies in the code");
}

// ---- criterion 6: incidence rank and the all-one flat sum ----

Outcome criterion6() {
    int rows = 0;
    for (const ReferenceRow& row : reference_rows(Family::PG)) {
        if (row.n > 341) continue;
        const GeometryModel model(Family::PG, row.spec.m, row.spec.h);
        const uint64_t count = pg_flat_count(row.spec.m, row.spec.h, row.spec.t);
        BitMatrix mat(count, row.n);
        std::vector<uint64_t> sum((row.n + 63) / 64, 0);
        size_t r = 0;
        for_each_flat(model, row.spec.t, [&](const Flat& fl) {
            const IncidenceVector v = incidence_vector(fl);
            const IncidenceVector comp = v.complemented();
            for (size_t w = 0; w < sum.size(); ++w) {
                mat.row(r)[w] = comp.words[w];
                sum[w] ^= v.words[w];
            }
            ++r;
        });
        if (r != count) return bad("flat count mismatch at " + tag(row.spec));
        if (rank_gf2(std::move(mat)) != row.n - row.k)
            return bad("complement-incidence rank != n-k at " + tag(row.spec));
        for (uint64_t i = 0; i < row.n; ++i)
            if (!((sum[i >> 6] >> (i & 63)) & 1))
                return bad("incidence sum misses point " + std::to_string(i) + " at " +
                           tag(row.spec));
        ++rows;
    }
    return ok(std::to_string(rows) +
              " rows: complement-incidence span has rank n-k and the flat sum is the all-one "
              "vector");
}

// ---- criterion 7: dual containment, nesting, negative controls ----

Outcome criterion7() {
    int dual = 0;
    for (Family f : {Family::PG, Family::EG})
        for (const ReferenceRow& row : reference_rows(f)) {
            if (row.n > p2(16) || 2 * row.spec.t < row.spec.m + 1) continue;
            const CyclicCode c = code_from_generator(row.n, cache.gen(row.spec));
            const bool by_matrix = is_dual_containing(c, DualCheckRoute::matrix);
            const bool by_poly = is_dual_containing(c, DualCheckRoute::polynomial);
            if (by_matrix != by_poly)
                return bad("dual-containment routes disagree at " + tag(row.spec));
            if (!by_matrix) return bad("dual not contained at " + tag(row.spec));
            ++dual;
        }

    int nested = 0;
    for (Family f : {Family::PG, Family::EG}) {
        std::map<std::array<int, 2>, std::vector<GeometryCodeSpec>> chains;
        for (const ReferenceRow& row : reference_rows(f)) {
            if (row.n > p2(21)) continue;  // the huge rows are covered by criterion 2
            chains[{row.spec.m, row.spec.h}].push_back(row.spec);
        }
        for (auto& [mh, specs] : chains)
            for (size_t i = 0; i + 1 < specs.size(); ++i) {
                if (specs[i + 1].t != specs[i].t + 1) continue;
                if (!divides(cache.gen(specs[i + 1]), cache.gen(specs[i])))
                    return bad("nesting fails between " + tag(specs[i]) + " and " +
                               tag(specs[i + 1]));
                ++nested;
            }
    }
    if (nested < 20) return bad("expected at least 20 adjacent nested pairs, saw " +
                                std::to_string(nested));

    // Negative controls: a corrupted generator is rejected outright, and the
    // even-weight code fails both dual-containment routes.
    const BitPoly corrupt = cache.gen({Family::PG, 4, 1, 2}) + BitPoly::monomial(1);
    bool rejected = false;
    try {
        static_cast<void>(code_from_generator(31, corrupt));
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) return bad("corrupted generator was accepted");
    const CyclicCode even = code_from_generator(7, BitPoly::parse("x+1"));
    if (is_dual_containing(even, DualCheckRoute::matrix) ||
        is_dual_containing(even, DualCheckRoute::polynomial))
        return bad("even-weight control reported dual-containing");
    return ok(std::to_string(dual) + " codes dual-containing on both routes, " +
              std::to_string(nested) + " adjacent pairs nested; corrupted generator rejected "
              "and the even-weight control fails both routes");
}

// ---- criterion 8: order maximality over every in-range nested pair ----

Outcome criterion8() {
    int pairs = 0, shapes = 0, cross = 0;
    for (Family fam : {Family::PG, Family::EG})
        for (int h = 1; h <= 16; ++h)
            for (int m = 2;; ++m) {
                const int ambient = fam == Family::PG ? h * (m + 1) : h * m;
                if (ambient > 62) break;
                const uint64_t n = fam == Family::PG ? (p2(ambient) - 1) / (p2(h) - 1)
                                                     : p2(ambient) - 1;
                if (n > p2(16)) break;
                const int tmin = (m + 2) / 2;  // smallest t with 2t >= m+1
                if (tmin > m - 2) continue;
                ++shapes;
                for (int ti = tmin; ti <= m - 2; ++ti)
                    for (int to = ti + 1; to <= m - 1; ++to) {
                        const GeometryCodeSpec si{fam, m, h, ti}, so{fam, m, h, to};
                        const IndexSet& Ii = cache.iset(si);
                        const IndexSet& Io = cache.iset(so);
                        uint64_t g = 0, diff = 0;
                        for (uint64_t a : Ii.members)
                            if (!Io.contains(a)) {
                                g = std::gcd(g, a);
                                ++diff;
                            }
                        const BitPoly f = quotient_poly(cache.gen(so), cache.gen(si));
                        if (static_cast<uint64_t>(f.degree()) != diff)
                            return bad("deg f != root count at " + tag(si) + "->t=" +
                                       std::to_string(to));
                        if (std::gcd(n, g) != 1)
                            return bad("ord(f) falls short of n at " + tag(si) + "->t=" +
                                       std::to_string(to));
                        if (f.degree() <= 4096) {
                            if (poly_order(f, n) != n)
                                return bad("direct order disagrees at " + tag(si) + "->t=" +
                                           std::to_string(to));
                            ++cross;
                        }
                        const auto [j0, j1] = order_witness_exponents(fam, m, h, ti);
                        if (!Ii.contains(j0) || Io.contains(j0) || !Ii.contains(j1) ||
                            Io.contains(j1))
                            return bad("witness exponents outside the root difference at " +
                                       tag(si) + "->t=" + std::to_string(to));
                        if (std::gcd(n, std::gcd(j0, j1)) != 1)
                            return bad("witness exponents share a factor with n at " + tag(si));
                        ++pairs;
                    }
            }
    return ok(std::to_string(pairs) + " nested pairs over " + std::to_string(shapes) +
              " shapes reach ord(f) = n (root-exponent identity; " + std::to_string(cross) +
              " re-proved by direct polynomial order), witnesses land in the root difference");
}

// ---- criterion 9: synchronizable rows and closed-form guarantees ----

Outcome criterion9() {
    const std::string pg_row = qsync_row({Family::PG, 5, 2, 3, 4});
    if (pg_row != "[[1365+a,763]] a<1365 phase=10 bit=2")
        return bad("pg(5,2,3->4) row reads \"" + pg_row + "\"");
    const std::string eg_row = qsync_row({Family::EG, 5, 2, 3, 4});
    if (eg_row != "[[1023+a,473]] a<1023 phase=11 bit=2")
        return bad("eg(5,2,3->4) row reads \"" + eg_row + "\"");

    int sets = 0;
    for (Family fam : {Family::PG, Family::EG})
        for (int h = 1; h <= 16; ++h)
            for (int m = 2;; ++m) {
                const int ambient = fam == Family::PG ? h * (m + 1) : h * m;
                if (ambient > 62) break;
                const uint64_t n = fam == Family::PG ? (p2(ambient) - 1) / (p2(h) - 1)
                                                     : p2(ambient) - 1;
                if (n > p2(16)) break;
                for (int t = 1; t <= m - 1; ++t) {
                    const uint64_t closed = fam == Family::PG ? pg_phase_guarantee(m, h, t)
                                                              : eg_phase_guarantee(m, h, t);
                    const CodeParams p =
                        fam == Family::PG ? pg_params(m, h, t) : eg_params(m, h, t);
                    if (closed != (p.d - 1) / 2)
                        return bad("closed-form guarantee != floor((d-1)/2) at " +
                                   tag({fam, m, h, t}));
                    ++sets;
                }
            }
    return ok("both reference rows exact; closed-form guarantees equal floor((d-1)/2) on " +
              std::to_string(sets) + " parameter sets");
}

// ---- criterion 10: binary Euclidean rows coincide with the projective family ----

Outcome criterion10() {
    // At h = 1 the Euclidean code of dimension parameter t equals the projective
    // code one step down the chain, C_{m-1, t-1}; same length 2^m - 1, same index
    // set, same generator. Pairing the same t instead fails immediately, e.g.
    // eg(3,1,1) is [7,1,7] while pg(2,1,1) is [7,4,3].
    int cases = 0;
    for (int m = 3; m <= 7; ++m)
        for (int t = 2; t <= m - 1; ++t) {
            const GeometryCodeSpec e{Family::EG, m, 1, t}, c{Family::PG, m - 1, 1, t - 1};
            const CodeParams pe = params(e), pc = params(c);
            if (pe.n != pc.n || pe.k != pc.k || pe.d != pc.d)
                return bad("parameters differ between " + tag(e) + " and " + tag(c));
            if (cache.iset(e).members != cache.iset(c).members)
                return bad("index sets differ between " + tag(e) + " and " + tag(c));
            if (!(cache.gen(e) == cache.gen(c)))
                return bad("generators differ between " + tag(e) + " and " + tag(c));
            ++cases;
        }
    const CodeParams e311 = eg_params(3, 1, 1), c211 = pg_params(2, 1, 1);
    if (e311.k == c211.k && e311.d == c211.d)
        return bad("same-t control unexpectedly matched at m=3");
    return ok(std::to_string(cases) +
              " cases m<=7: eg(m,1,t) = pg(m-1,1,t-1) in parameters, index sets, and "
              "generators; the same-t pairing fails the control ([7,1,7] vs [7,4,3])");
}

}  // namespace

int main(int argc, char** argv) {
    bool include_huge = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--include-huge") include_huge = true;

    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1},
        {2, [include_huge] { return criterion2(include_huge); }},
        {3, criterion3},
        {4, criterion4},
        {5, criterion5},
        {6, criterion6},
        {7, criterion7},
        {8, criterion8},
        {9, criterion9},
        {10, criterion10}};

    bool all = true;
    for (const auto& [num, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = bad(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << num << ": " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
