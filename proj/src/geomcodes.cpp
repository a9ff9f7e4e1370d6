#include "qsyncgeo/geomcodes.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "qsyncgeo/algebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsyncgeo {

IndexSet::IndexSet(uint64_t n_, std::vector<uint64_t> members_)
    : n(n_), members(std::move(members_)) {
    if (!std::is_sorted(members.begin(), members.end()))
        std::sort(members.begin(), members.end());
    for (uint64_t a : members) {
        if (a < 1 || a > n) throw std::invalid_argument("index set member out of 1..n");
        uint64_t d = (2 * a) % n;
        if (d == 0) d = n;
        if (!std::binary_search(members.begin(), members.end(), d))
            throw std::logic_error("index set not closed under doubling at " + std::to_string(a));
    }
}

bool IndexSet::contains(uint64_t a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

uint64_t weight_qary(uint64_t a, int h) {
    if (h < 1) throw std::invalid_argument("weight_qary needs h >= 1");
    const uint64_t mask = (uint64_t{1} << h) - 1;
    uint64_t w = 0;
    while (a) {
        w += a & mask;
        a >>= h;
    }
    return w;
}

namespace {

struct ScanSpec {
    int width;        // ambient bits w; moduli are 2^w - 1
    uint64_t n;       // exponent range 1..n
    uint64_t factor;  // a -> a*factor before rotating (2^h-1 projective, 1 Euclidean)
    int h;
    uint64_t max_weight;
};

ScanSpec make_scan(Family fam, int m, int h, int t) {
    if (m < 2 || h < 1) throw std::invalid_argument("index set needs m >= 2, h >= 1");
    if (t < 1 || t > m - 1) throw std::invalid_argument("index set needs 1 <= t <= m-1");
    const int width = fam == Family::PG ? h * (m + 1) : h * m;
    if (width > 62) throw std::invalid_argument("ambient width too large");
    const uint64_t full = (uint64_t{1} << width) - 1;
    const uint64_t qm1 = (uint64_t{1} << h) - 1;
    ScanSpec s;
    s.width = width;
    s.n = fam == Family::PG ? full / qm1 : full;
    s.factor = fam == Family::PG ? qm1 : 1;
    s.h = h;
    s.max_weight = static_cast<uint64_t>(m - t) * qm1;
    return s;
}

inline bool scan_member(const ScanSpec& s, uint64_t a) {
    const uint64_t mask = (uint64_t{1} << s.width) - 1;
    const uint64_t digit = (uint64_t{1} << s.h) - 1;
    uint64_t b = a * s.factor;  // in 1..2^w-1; the all-ones value stands for residue 0
    for (int i = 0; i <= s.h; ++i) {
        uint64_t r = i ? ((b << i) | (b >> (s.width - i))) & mask : b;
        uint64_t w = 0;
        while (r) {
            w += r & digit;
            r >>= s.h;
        }
        if (w > s.max_weight) return false;
    }
    return true;
}

IndexSet scan_serial(const ScanSpec& s) {
    std::vector<uint64_t> members;
    for (uint64_t a = 1; a <= s.n; ++a)
        if (scan_member(s, a)) members.push_back(a);
    return IndexSet(s.n, std::move(members));
}

IndexSet scan_parallel(const ScanSpec& s) {
#ifdef _OPENMP
    const int nt = omp_get_max_threads();
    if (nt > 1 && s.n > 1u << 16) {
        std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            const int tid = omp_get_thread_num();
            const uint64_t lo = 1 + s.n * static_cast<uint64_t>(tid) / static_cast<uint64_t>(nt);
            const uint64_t hi = s.n * (static_cast<uint64_t>(tid) + 1) / static_cast<uint64_t>(nt);
            auto& mine = parts[static_cast<size_t>(tid)];
            for (uint64_t a = lo; a <= hi; ++a)
                if (scan_member(s, a)) mine.push_back(a);
        }
        std::vector<uint64_t> members;
        for (auto& p : parts) members.insert(members.end(), p.begin(), p.end());
        return IndexSet(s.n, std::move(members));
    }
#endif
    return scan_serial(s);
}

}  // namespace

IndexSet pg_index_set(int m, int h, int t) { return scan_parallel(make_scan(Family::PG, m, h, t)); }
IndexSet eg_index_set(int m, int h, int t) { return scan_parallel(make_scan(Family::EG, m, h, t)); }
IndexSet pg_index_set_serial(int m, int h, int t) { return scan_serial(make_scan(Family::PG, m, h, t)); }
IndexSet eg_index_set_serial(int m, int h, int t) { return scan_serial(make_scan(Family::EG, m, h, t)); }

IndexSet index_set(const GeometryCodeSpec& spec) {
    return spec.family == Family::PG ? pg_index_set(spec.m, spec.h, spec.t)
                                     : eg_index_set(spec.m, spec.h, spec.t);
}

namespace {

BitPoly generator_from_index_set(const IndexSet& I, const Field& ambient, uint64_t beta) {
    BitPoly g = BitPoly::one();
    std::vector<bool> done(I.members.size(), false);
    for (size_t i = 0; i < I.members.size(); ++i) {
        if (done[i]) continue;
        const uint64_t rep = I.members[i];
        // Walk the doubling orbit; every element must sit in the set.
        uint64_t c = rep;
        do {
            const auto it = std::lower_bound(I.members.begin(), I.members.end(), c);
            if (it == I.members.end() || *it != c)
                throw std::logic_error("doubling orbit escapes the index set at " +
                                       std::to_string(c));
            done[static_cast<size_t>(it - I.members.begin())] = true;
            c = (2 * c) % I.n;
            if (c == 0) c = I.n;
        } while (c != rep);
        g = g * minimal_polynomial(rep, ambient, beta, I.n);
    }
    if (static_cast<uint64_t>(g.degree()) != I.members.size())
        throw std::logic_error("generator degree does not match the index set size");
    return g;
}

}  // namespace

BitPoly pg_generator_poly(int m, int h, int t, const PrimitivePolyTable& polys) {
    const IndexSet I = pg_index_set(m, h, t);
    Field ambient(h * (m + 1), polys);
    const uint64_t beta = ambient.pow(ambient.alpha(), (int64_t{1} << h) - 1);
    return generator_from_index_set(I, ambient, beta);
}

BitPoly eg_generator_poly(int m, int h, int t, const PrimitivePolyTable& polys) {
    const IndexSet I = eg_index_set(m, h, t);
    Field ambient(h * m, polys);
    return generator_from_index_set(I, ambient, ambient.alpha());
}

BitPoly generator_poly(const GeometryCodeSpec& spec, const PrimitivePolyTable& polys) {
    return spec.family == Family::PG ? pg_generator_poly(spec.m, spec.h, spec.t, polys)
                                     : eg_generator_poly(spec.m, spec.h, spec.t, polys);
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    cpp_int r = 1;
    for (int i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

uint64_t hamada_dimension(int m, int h, int t) {
    if (m < 1 || h < 1 || t < 1 || t > m)
        throw std::invalid_argument("hamada_dimension needs m >= 1, h >= 1, 1 <= t <= m");
    cpp_int total = 0;
    std::vector<int> s(static_cast<size_t>(h), t + 1);
    for (;;) {
        cpp_int prod = 1;
        for (int j = 0; j < h && prod != 0; ++j) {
            const int sj = s[static_cast<size_t>(j)];
            const int sj1 = s[static_cast<size_t>((j + 1) % h)];
            const int D = 2 * sj1 - sj;
            if (D < 0 || D > m + 1) {
                prod = 0;
                break;
            }
            cpp_int term = 0;
            for (int i = 0; 2 * i <= D; ++i) {
                const cpp_int part = binom(m + 1, i) * binom(m + D - 2 * i, m);
                term += (i & 1) ? -part : part;
            }
            prod *= term;
        }
        total += prod;
        size_t j = 0;
        while (j < s.size() && ++s[j] == m + 2) s[j++] = t + 1;
        if (j == s.size()) break;
    }
    if (total < 0 || total > cpp_int(UINT64_MAX))
        throw std::overflow_error("incidence-span dimension out of range");
    return static_cast<uint64_t>(total);
}

namespace {

uint64_t pow2(int e) {
    if (e < 0 || e > 62) throw std::invalid_argument("power out of range");
    return uint64_t{1} << e;
}

void check_mht(int m, int h, int t) {
    if (m < 2 || h < 1) throw std::invalid_argument("code parameters need m >= 2, h >= 1");
    if (t < 1 || t > m - 1) throw std::invalid_argument("code parameters need 1 <= t <= m-1");
    if (m > 62 || h > 62 || h * (m + 1) > 62)
        throw std::invalid_argument("code length out of range: h*(m+1) must stay below 63 bits");
}

}  // namespace

CodeParams pg_params(int m, int h, int t) {
    check_mht(m, h, t);
    CodeParams p;
    p.n = (pow2(h * (m + 1)) - 1) / (pow2(h) - 1);
    p.k = p.n - hamada_dimension(m, h, t) + 1;
    p.d = (pow2(h * (m - t + 1)) - 1) / (pow2(h) - 1);
    return p;
}

CodeParams eg_params(int m, int h, int t) {
    check_mht(m, h, t);
    CodeParams p;
    p.n = pow2(h * m) - 1;
    p.k = pow2(h * m) - hamada_dimension(m, h, t) + hamada_dimension(m - 1, h, t);
    p.d = (pow2(h) + 2) * pow2(h * (m - t - 1)) - 1;
    return p;
}

CodeParams params(const GeometryCodeSpec& spec) {
    return spec.family == Family::PG ? pg_params(spec.m, spec.h, spec.t)
                                     : eg_params(spec.m, spec.h, spec.t);
}

DualDimensionReport dual_dimension_check(int m, int h, int t) {
    if (m < 2 || t < 1 || t > m - 2)
        throw std::invalid_argument("dual dimension relation needs 1 <= t <= m-2");
    DualDimensionReport r;
    r.dual_dimension = hamada_dimension(m, h, t) - hamada_dimension(m - 1, h, t) - 1;
    const CodeParams p = eg_params(m, h, t);
    r.n_minus_k = p.n - p.k;
    r.ok = r.dual_dimension == r.n_minus_k;
    return r;
}

const std::vector<GeometryCodeSpec>& table_specs(Family f) {
    static const std::vector<GeometryCodeSpec> pg_rows = {
        {Family::PG, 4, 1, 2}, {Family::PG, 4, 1, 3}, {Family::PG, 4, 2, 2},
        {Family::PG, 4, 2, 3}, {Family::PG, 4, 3, 2}, {Family::PG, 4, 3, 3},
        {Family::PG, 5, 1, 3}, {Family::PG, 5, 1, 4}, {Family::PG, 5, 2, 3},
        {Family::PG, 5, 2, 4}, {Family::PG, 5, 3, 3}, {Family::PG, 5, 3, 4},
        {Family::PG, 6, 1, 3}, {Family::PG, 6, 1, 4}, {Family::PG, 6, 1, 5},
        {Family::PG, 6, 2, 3}, {Family::PG, 6, 2, 4}, {Family::PG, 6, 2, 5},
        {Family::PG, 7, 1, 4}, {Family::PG, 7, 1, 5}, {Family::PG, 7, 1, 6},
        {Family::PG, 7, 2, 4}, {Family::PG, 7, 2, 5}, {Family::PG, 7, 2, 6},
        {Family::PG, 8, 1, 4}, {Family::PG, 8, 1, 5}, {Family::PG, 8, 1, 6},
        {Family::PG, 8, 1, 7}, {Family::PG, 8, 2, 4}, {Family::PG, 8, 2, 5},
        {Family::PG, 8, 2, 6}, {Family::PG, 8, 2, 7},
    };
    static const std::vector<GeometryCodeSpec> eg_rows = {
        {Family::EG, 5, 2, 3}, {Family::EG, 5, 2, 4}, {Family::EG, 5, 3, 3},
        {Family::EG, 5, 3, 4}, {Family::EG, 6, 2, 4}, {Family::EG, 6, 2, 5},
        {Family::EG, 6, 3, 4}, {Family::EG, 6, 3, 5}, {Family::EG, 6, 4, 4},
        {Family::EG, 6, 4, 5}, {Family::EG, 7, 2, 4}, {Family::EG, 7, 2, 5},
        {Family::EG, 7, 2, 6}, {Family::EG, 7, 3, 4}, {Family::EG, 7, 3, 5},
        {Family::EG, 7, 3, 6}, {Family::EG, 8, 2, 5}, {Family::EG, 8, 2, 6},
        {Family::EG, 8, 2, 7}, {Family::EG, 8, 3, 5}, {Family::EG, 8, 3, 6},
        {Family::EG, 8, 3, 7}, {Family::EG, 9, 2, 5}, {Family::EG, 9, 2, 6},
        {Family::EG, 9, 2, 7}, {Family::EG, 9, 2, 8},
    };
    return f == Family::PG ? pg_rows : eg_rows;
}

std::vector<TableRow> table_rows(Family f) {
    std::vector<TableRow> rows;
    for (const auto& spec : table_specs(f)) rows.push_back({spec, params(spec)});
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "family,m,h,t,n,k,d\n";
    for (const auto& r : rows) {
        out += family_name(r.spec.family);
        out += ',' + std::to_string(r.spec.m) + ',' + std::to_string(r.spec.h) + ',' +
               std::to_string(r.spec.t) + ',' + std::to_string(r.params.n) + ',' +
               std::to_string(r.params.k) + ',' + std::to_string(r.params.d) + '\n';
    }
    return out;
}

std::string table_json(const std::vector<TableRow>& rows, uint64_t genpoly_n_gate,
                       const PrimitivePolyTable& polys) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"family", family_name(r.spec.family)}, {"m", r.spec.m},
                         {"h", r.spec.h},                        {"t", r.spec.t},
                         {"n", r.params.n},                      {"k", r.params.k},
                         {"d", r.params.d}};
        if (r.params.n <= genpoly_n_gate) j["g_hex"] = generator_poly(r.spec, polys).to_hex();
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace qsyncgeo
