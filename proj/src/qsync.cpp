#include "qsyncgeo/qsync.hpp"

#include <stdexcept>

#include <json.hpp>

#include "qsyncgeo/algebra.hpp"

namespace qsyncgeo {

BitPoly quotient_poly(const BitPoly& g_outer, const BitPoly& g_inner) {
    if (g_outer.is_zero()) throw std::invalid_argument("outer generator is zero");
    auto [q, r] = poly_divmod(g_inner, g_outer);
    if (!r.is_zero()) throw std::invalid_argument("codes not nested");
    return q;
}

namespace {

void check_spec(const QsyncSpec& s) {
    if (s.m < 2 || s.h < 1) throw std::invalid_argument("need m >= 2 and h >= 1");
    if (2 * s.t_inner < s.m + 1)
        throw std::invalid_argument(
            "t_inner below (m+1)/2: the inner code would not be dual-containing");
    if (s.t_inner >= s.t_outer)
        throw std::invalid_argument("need t_inner < t_outer");
    if (s.t_outer > s.m - 1)
        throw std::invalid_argument("t_outer above m-1: the chain ends at t = m-1");
}

uint64_t pow2u(int e) {
    if (e < 0 || e > 62) throw std::invalid_argument("power out of range");
    return uint64_t{1} << e;
}

}  // namespace

QsyncParams build_qsync(const QsyncSpec& spec, const PrimitivePolyTable& polys) {
    check_spec(spec);
    const GeometryCodeSpec inner_spec{spec.family, spec.m, spec.h, spec.t_inner};
    const GeometryCodeSpec outer_spec{spec.family, spec.m, spec.h, spec.t_outer};
    const CodeParams p1 = params(inner_spec);
    const CodeParams p2 = params(outer_spec);

    const CyclicCode inner = code_from_generator(p1.n, generator_poly(inner_spec, polys));
    const CyclicCode outer = code_from_generator(p2.n, generator_poly(outer_spec, polys));
    if (inner.k != p1.k || outer.k != p2.k)
        throw std::logic_error("generator degree disagrees with the dimension formula");
    if (!is_dual_containing(inner))
        throw std::domain_error("inner code is not dual-containing");
    if (!is_subcode(inner, outer)) throw std::domain_error("codes not nested");
    if (2 * inner.k <= inner.n)
        throw std::domain_error("inner dimension must exceed n/2 to leave logical qubits");

    QsyncParams q;
    q.n = p1.n;
    q.k1 = p1.k;
    q.k2 = p2.k;
    q.d1 = p1.d;
    q.d2 = p2.d;
    q.f = quotient_poly(outer.g, inner.g);
    if (static_cast<uint64_t>(q.f.degree()) != q.k2 - q.k1)
        throw std::logic_error("quotient degree is not k2 - k1");
    q.ord_f = poly_order(q.f, q.n);
    q.logical = 2 * q.k1 - q.n;
    q.phase_t = (q.d1 - 1) / 2;
    q.bit_t = (q.d2 - 1) / 2;
    q.max_total = q.ord_f - 1;
    return q;
}

bool assert_max_tolerance(const QsyncParams& p) { return p.ord_f == p.n; }

std::pair<uint64_t, uint64_t> order_witness_exponents(Family family, int m, int h, int t_inner) {
    const uint64_t q = pow2u(h);
    if (family == Family::PG) {
        const uint64_t j0 = (pow2u(h * (m - t_inner)) - 1) / (q - 1);
        const uint64_t j1 = (pow2u(h * (m - t_inner + 1)) - 1) / (q - 1) - 2;
        return {j0, j1};
    }
    const uint64_t j0 = pow2u(h * (m - t_inner)) - 1;
    // j0-1 stays a valid second witness only while its low digit q-2 exceeds
    // the one-notch-smaller weight bound; in the binary field that digit is 0,
    // so use 2*j0-1 there (same rotated weight as j0, and gcd(j0, 2*j0-1) = 1).
    const uint64_t j1 = h == 1 ? 2 * j0 - 1 : j0 - 1;
    return {j0, j1};
}

uint64_t pg_phase_guarantee(int m, int h, int t) {
    return (pow2u(h * (m - t + 1) - 1) - pow2u(h - 1)) / (pow2u(h) - 1);
}

uint64_t eg_phase_guarantee(int m, int h, int t) {
    return (pow2u(h - 1) + 1) * pow2u(h * (m - t - 1)) - 1;
}

std::string qsync_row(const QsyncSpec& spec, const PrimitivePolyTable& polys) {
    const QsyncParams q = build_qsync(spec, polys);
    return "[[" + std::to_string(q.n) + "+a," + std::to_string(q.logical) + "]] a<" +
           std::to_string(q.ord_f) + " phase=" + std::to_string(q.phase_t) +
           " bit=" + std::to_string(q.bit_t);
}

std::string qsync_json(const QsyncSpec& spec, uint64_t f_hex_n_gate,
                       const PrimitivePolyTable& polys) {
    const QsyncParams q = build_qsync(spec, polys);
    nlohmann::json j{{"family", family_name(spec.family)},
                     {"m", spec.m},
                     {"h", spec.h},
                     {"t_inner", spec.t_inner},
                     {"t_outer", spec.t_outer},
                     {"n", q.n},
                     {"logical", q.logical},
                     {"ord_f", q.ord_f},
                     {"phase_t", q.phase_t},
                     {"bit_t", q.bit_t}};
    if (q.n <= f_hex_n_gate) j["f_hex"] = q.f.to_hex();
    return j.dump(2);
}

}  // namespace qsyncgeo
