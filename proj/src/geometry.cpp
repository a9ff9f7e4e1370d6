#include "qsyncgeo/geometry.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace qsyncgeo {

namespace {

using boost::multiprecision::cpp_int;

// All base-q digit strings of the given length, least significant digit first.
template <typename Fn>
void for_each_digits(uint64_t q, size_t len, Fn&& fn) {
    std::vector<uint64_t> digits(len, 0);
    for (;;) {
        fn(digits);
        size_t i = 0;
        while (i < len && ++digits[i] == q) digits[i++] = 0;
        if (i == len) return;
    }
}

uint64_t checked_u64(const cpp_int& v, const char* what) {
    if (v < 0 || v > cpp_int(UINT64_MAX)) throw std::overflow_error(what);
    return static_cast<uint64_t>(v);
}

cpp_int gaussian_binomial(int a, int b, uint64_t q) {
    if (b < 0 || b > a) return 0;
    cpp_int num = 1, den = 1;
    cpp_int qi = q;
    for (int i = 0; i < b; ++i) {
        num *= boost::multiprecision::pow(qi, a - i) - 1;
        den *= boost::multiprecision::pow(qi, i + 1) - 1;
    }
    return num / den;
}

}  // namespace

Family family_from_string(std::string_view s) {
    if (s == "pg" || s == "PG") return Family::PG;
    if (s == "eg" || s == "EG") return Family::EG;
    throw std::invalid_argument("unknown geometry family: " + std::string(s) +
                                " (expected pg or eg)");
}

const char* family_name(Family f) { return f == Family::PG ? "pg" : "eg"; }

GeometryModel::GeometryModel(Family family_, int m_, int h_, const PrimitivePolyTable& polys)
    : family(family_),
      m(m_),
      h(h_),
      ambient_degree(family_ == Family::PG ? h_ * (m_ + 1) : h_ * m_),
      n(0),
      scalars(h_, polys),
      ambient((ambient_degree >= 1 && ambient_degree <= ambient_cap)
                  ? Field(ambient_degree, polys)
                  : throw std::invalid_argument(
                        "ambient field degree " + std::to_string(ambient_degree) +
                        " exceeds the supported cap " + std::to_string(ambient_cap))) {
    if (m < 2) throw std::invalid_argument("geometry needs m >= 2");
    const uint64_t full = ambient.order();
    n = family == Family::PG ? full / (q() - 1) : full;

    // Scalar embedding GF(2^h) -> ambient subfield.
    const uint64_t g2 = subfield_generator_image(scalars, ambient);
    emb_.resize(q());
    for (uint64_t c = 0; c < q(); ++c) emb_[c] = ambient.eval(BitPoly::from_uint(c), g2);

    if (ambient_degree <= log_table_cap) {
        log_.assign(uint64_t{1} << ambient_degree, 0);
        uint64_t r = 1;
        for (uint64_t i = 0; i < full; ++i) {
            log_[r] = static_cast<uint32_t>(family == Family::PG ? i % n : i);
            r = ambient.mul(r, ambient.alpha());
        }
    }
}

uint64_t GeometryModel::point_element(uint64_t index) const {
    return ambient.pow(ambient.alpha(), static_cast<int64_t>(index % n));
}

uint64_t GeometryModel::point_index(uint64_t v) const {
    if (v == 0) throw std::invalid_argument("point_index of the zero element");
    if (log_.empty())
        throw std::runtime_error("no discrete-log table: ambient degree " +
                                 std::to_string(ambient_degree) + " exceeds the cap " +
                                 std::to_string(log_table_cap));
    return log_[v];
}

uint64_t IncidenceVector::weight() const {
    uint64_t w = 0;
    for (uint64_t word : words) w += static_cast<uint64_t>(std::popcount(word));
    return w;
}

IncidenceVector IncidenceVector::complemented() const {
    IncidenceVector out(n);
    for (size_t i = 0; i < words.size(); ++i) out.words[i] = ~words[i];
    if (n & 63) out.words.back() &= (uint64_t{1} << (n & 63)) - 1;
    return out;
}

IncidenceVector IncidenceVector::shifted(uint64_t s) const {
    IncidenceVector out(n);
    s %= n;
    for (size_t wi = 0; wi < words.size(); ++wi) {
        uint64_t word = words[wi];
        while (word) {
            const uint64_t i = wi * 64 + static_cast<uint64_t>(std::countr_zero(word));
            word &= word - 1;
            uint64_t j = i + s;
            if (j >= n) j -= n;
            out.set(j);
        }
    }
    return out;
}

BitPoly IncidenceVector::to_poly() const { return BitPoly::from_words(words, static_cast<long>(n)); }

std::string IncidenceVector::to_hex() const {
    const uint64_t nibbles = (n + 3) / 4;
    std::string s(nibbles, '0');
    for (uint64_t i = 0; i < nibbles; ++i) {
        const uint64_t nib = (words[i / 16] >> ((i % 16) * 4)) & 0xf;
        s[nibbles - 1 - i] = "0123456789abcdef"[nib];
    }
    return "0x" + s;
}

std::vector<uint64_t> flat_points(const Flat& f) {
    const GeometryModel& gm = *f.model;
    const Field& F = gm.ambient;
    const auto& sub = gm.scalar_images();
    std::vector<uint64_t> pts;
    if (gm.family == Family::PG) {
        // One representative per projective point: leading coefficient fixed to 1.
        const size_t r = f.basis.size();
        for (size_t lead = 0; lead < r; ++lead) {
            for_each_digits(gm.q(), r - lead - 1, [&](const std::vector<uint64_t>& dg) {
                uint64_t e = f.basis[lead];
                for (size_t j = 0; j < dg.size(); ++j)
                    e ^= F.mul(sub[dg[j]], f.basis[lead + 1 + j]);
                pts.push_back(gm.point_index(e));
            });
        }
    } else {
        for_each_digits(gm.q(), f.basis.size(), [&](const std::vector<uint64_t>& dg) {
            uint64_t e = f.offset;
            for (size_t j = 0; j < dg.size(); ++j) e ^= F.mul(sub[dg[j]], f.basis[j]);
            pts.push_back(gm.point_index(e));
        });
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

IncidenceVector incidence_vector(const Flat& f) {
    IncidenceVector v(f.model->n);
    for (uint64_t p : flat_points(f)) v.set(p);
    return v;
}

std::string flat_json(const Flat& f) {
    nlohmann::json j;
    j["family"] = family_name(f.model->family);
    j["m"] = f.model->m;
    j["h"] = f.model->h;
    auto hex = [](uint64_t v) { return BitPoly::from_uint(v).to_hex(); };
    std::vector<std::string> basis;
    for (uint64_t b : f.basis) basis.push_back(hex(b));
    j["basis"] = basis;
    j["offset"] = hex(f.offset);
    return j.dump();
}

uint64_t pg_flat_count(int m, int h, int t) {
    return checked_u64(gaussian_binomial(m + 1, t + 1, uint64_t{1} << h), "flat count overflow");
}

uint64_t eg_flat_count(int m, int h, int t) {
    const cpp_int cosets = boost::multiprecision::pow(cpp_int(uint64_t{1} << h), m - t) - 1;
    return checked_u64(gaussian_binomial(m, t, uint64_t{1} << h) * cosets, "flat count overflow");
}

namespace {

// Canonical reduced-echelon enumeration: every GF(2^h)-subspace of dimension
// `rows` inside coordinates 0..cols-1 appears exactly once. The basis matrix has
// unit pivots in strictly increasing columns, zeros below/left of and in other
// pivots' columns, free entries elsewhere.
void for_each_rref_basis(const GeometryModel& gm, int rows, int cols,
                         const std::function<void(const std::vector<uint64_t>&,
                                                  const std::vector<int>&)>& fn) {
    const Field& F = gm.ambient;
    const auto& sub = gm.scalar_images();
    std::vector<uint64_t> apow(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) apow[static_cast<size_t>(c)] = gm.point_element(static_cast<uint64_t>(c));

    std::vector<int> piv(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) piv[static_cast<size_t>(i)] = i;
    for (;;) {
        // Free coordinates: (row i, col c) with c > piv[i] and c not a pivot.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(static_cast<size_t>(cols), false);
        for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
        for (int i = 0; i < rows; ++i)
            for (int c = piv[static_cast<size_t>(i)] + 1; c < cols; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(i, c);

        for_each_digits(gm.q(), free_pos.size(), [&](const std::vector<uint64_t>& dg) {
            std::vector<uint64_t> basis(static_cast<size_t>(rows));
            for (int i = 0; i < rows; ++i)
                basis[static_cast<size_t>(i)] = apow[static_cast<size_t>(piv[static_cast<size_t>(i)])];
            for (size_t k = 0; k < free_pos.size(); ++k) {
                if (!dg[k]) continue;
                auto [i, c] = free_pos[k];
                basis[static_cast<size_t>(i)] ^= F.mul(sub[dg[k]], apow[static_cast<size_t>(c)]);
            }
            fn(basis, piv);
        });

        // Next pivot combination.
        int i = rows - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == cols - rows + i) --i;
        if (i < 0) return;
        ++piv[static_cast<size_t>(i)];
        for (int j = i + 1; j < rows; ++j)
            piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace

void for_each_flat(const GeometryModel& gm, int t,
                   const std::function<void(const Flat&)>& fn) {
    if (t < 1 || t > gm.m - 1) throw std::invalid_argument("flat dimension t out of range");
    if (gm.family == Family::PG) {
        for_each_rref_basis(gm, t + 1, gm.m + 1,
                            [&](const std::vector<uint64_t>& basis, const std::vector<int>&) {
                                fn(Flat{&gm, basis, 0});
                            });
        return;
    }
    // EG: for every t-dimensional direction subspace W, one coset per canonical
    // representative (zero in all pivot coordinates), skipping W itself.
    const Field& F = gm.ambient;
    const auto& sub = gm.scalar_images();
    std::vector<uint64_t> apow(static_cast<size_t>(gm.m));
    for (int c = 0; c < gm.m; ++c) apow[static_cast<size_t>(c)] = gm.point_element(static_cast<uint64_t>(c));
    for_each_rref_basis(gm, t, gm.m,
                        [&](const std::vector<uint64_t>& basis, const std::vector<int>& piv) {
                            std::vector<int> non_piv;
                            std::vector<bool> is_piv(static_cast<size_t>(gm.m), false);
                            for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
                            for (int c = 0; c < gm.m; ++c)
                                if (!is_piv[static_cast<size_t>(c)]) non_piv.push_back(c);
                            for_each_digits(gm.q(), non_piv.size(),
                                            [&](const std::vector<uint64_t>& dg) {
                                                uint64_t off = 0;
                                                for (size_t j = 0; j < dg.size(); ++j)
                                                    off ^= F.mul(sub[dg[j]],
                                                                 apow[static_cast<size_t>(non_piv[j])]);
                                                if (off) fn(Flat{&gm, basis, off});
                                            });
                        });
}

std::vector<Flat> enumerate_flats(const GeometryModel& gm, int t) {
    const uint64_t count = gm.family == Family::PG ? pg_flat_count(gm.m, gm.h, t)
                                                   : eg_flat_count(gm.m, gm.h, t);
    if (count > 10'000'000)
        throw std::runtime_error("exhaustive flat enumeration too large (" +
                                 std::to_string(count) + " flats); use sampled flats");
    std::vector<Flat> out;
    out.reserve(count);
    for_each_flat(gm, t, [&](const Flat& f) { out.push_back(f); });
    return out;
}

namespace {

// Grow span set by one independent generator: span <- span + GF(2^h)*cand.
void extend_span(const GeometryModel& gm, std::unordered_set<uint64_t>& span, uint64_t cand) {
    std::vector<uint64_t> base(span.begin(), span.end());
    for (uint64_t c = 1; c < gm.q(); ++c) {
        const uint64_t ce = gm.ambient.mul(gm.scalar_images()[c], cand);
        for (uint64_t s : base) span.insert(s ^ ce);
    }
}

}  // namespace

std::vector<Flat> sample_flats(const GeometryModel& gm, int t, size_t count, uint64_t seed) {
    if (t < 1 || t > gm.m - 1) throw std::invalid_argument("flat dimension t out of range");
    std::mt19937_64 rng(seed);
    const uint64_t mask = (uint64_t{1} << gm.ambient_degree) - 1;
    std::vector<Flat> out;
    out.reserve(count);
    const size_t r = gm.family == Family::PG ? static_cast<size_t>(t) + 1 : static_cast<size_t>(t);
    while (out.size() < count) {
        std::unordered_set<uint64_t> span{0};
        std::vector<uint64_t> basis;
        while (basis.size() < r) {
            const uint64_t cand = rng() & mask;
            if (!cand || span.count(cand)) continue;
            basis.push_back(cand);
            extend_span(gm, span, cand);
        }
        uint64_t offset = 0;
        if (gm.family == Family::EG) {
            do offset = rng() & mask;
            while (span.count(offset));
        }
        out.push_back(Flat{&gm, basis, offset});
    }
    return out;
}

bool is_flat_incidence(const GeometryModel& gm, int t, const IncidenceVector& v) {
    if (v.n != gm.n) return false;
    std::vector<uint64_t> elems;
    for (uint64_t i = 0; i < gm.n; ++i)
        if (v.get(i)) elems.push_back(gm.point_element(i));
    const uint64_t q = gm.q();
    if (gm.family == Family::PG) {
        const size_t r = static_cast<size_t>(t) + 1;
        uint64_t expect = 1, qp = 1;
        for (size_t i = 0; i < r; ++i) qp *= q;
        expect = (qp - 1) / (q - 1);
        if (elems.size() != expect) return false;
        std::unordered_set<uint64_t> span{0};
        size_t rank = 0;
        for (uint64_t e : elems)
            if (!span.count(e)) {
                extend_span(gm, span, e);
                ++rank;
            }
        if (rank != r) return false;
        std::unordered_set<uint64_t> marked;
        for (uint64_t i = 0; i < gm.n; ++i)
            if (v.get(i)) marked.insert(i);
        for (uint64_t s : span)
            if (s && !marked.count(gm.point_index(s))) return false;
        return true;
    }
    uint64_t expect = 1;
    for (int i = 0; i < t; ++i) expect *= q;
    if (elems.size() != expect) return false;
    const uint64_t v0 = elems.front();
    std::unordered_set<uint64_t> diff;
    for (uint64_t e : elems) diff.insert(e ^ v0);
    std::unordered_set<uint64_t> span{0};
    size_t rank = 0;
    for (uint64_t d : diff)
        if (d && !span.count(d)) {
            extend_span(gm, span, d);
            ++rank;
        }
    if (rank != static_cast<size_t>(t) || span.size() != diff.size()) return false;
    for (uint64_t s : span)
        if (!diff.count(s)) return false;
    return true;
}

std::vector<std::pair<uint64_t, uint64_t>> hyperoval(int h) {
    Field fs(h);
    const uint64_t q = fs.order() + 1;
    uint64_t c = 0;
    for (uint64_t x = 1; x < q; ++x)
        if (fs.trace(x) == 1) {
            c = x;
            break;
        }
    if (!c) throw std::logic_error("no trace-one element");  // unreachable: trace is onto
    std::vector<std::pair<uint64_t, uint64_t>> pts{{0, 0}, {1, 0}};
    for (uint64_t s = 0; s < q; ++s) {
        const uint64_t den = fs.mul(s, s) ^ s ^ c;
        if (!den) throw std::logic_error("hyperoval denominator vanished");  // Tr(c)=1 forbids this
        const uint64_t inv = fs.inv(den);
        pts.emplace_back(fs.mul(s, inv), inv);
    }
    return pts;
}

IncidenceVector pg_min_weight_support(const GeometryModel& gm, int t) {
    if (gm.family != Family::PG) throw std::invalid_argument("pg_min_weight_support needs a PG model");
    if (t < 1 || t > gm.m - 1) throw std::invalid_argument("t out of range");
    std::vector<uint64_t> basis(static_cast<size_t>(gm.m - t) + 1);
    for (size_t j = 0; j < basis.size(); ++j) basis[j] = gm.point_element(j);
    return incidence_vector(Flat{&gm, basis, 0});
}

IncidenceVector eg_min_weight_support(const GeometryModel& gm, int t) {
    if (gm.family != Family::EG) throw std::invalid_argument("eg_min_weight_support needs an EG model");
    if (t < 1 || t > gm.m - 1) throw std::invalid_argument("t out of range");
    const Field& F = gm.ambient;
    const auto& sub = gm.scalar_images();
    // Hyperoval inside U = span{1, alpha}; direction space W = span{alpha^2 ... alpha^{m-t}}.
    std::vector<uint64_t> pts;
    for (auto [u, w] : hyperoval(gm.h))
        pts.push_back(gm.embed_scalar(u) ^ F.mul(gm.embed_scalar(w), F.alpha()));
    std::vector<uint64_t> wbasis;
    for (int j = 2; j <= gm.m - t; ++j) wbasis.push_back(gm.point_element(static_cast<uint64_t>(j)));

    IncidenceVector v(gm.n);
    for (uint64_t p : pts)
        for_each_digits(gm.q(), wbasis.size(), [&](const std::vector<uint64_t>& dg) {
            uint64_t e = p;
            for (size_t j = 0; j < dg.size(); ++j) e ^= F.mul(sub[dg[j]], wbasis[j]);
            if (e) v.set(gm.point_index(e));
        });
    return v;
}

}  // namespace qsyncgeo
