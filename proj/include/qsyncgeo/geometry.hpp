#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsyncgeo/bitpoly.hpp"
#include "qsyncgeo/field.hpp"

namespace qsyncgeo {

enum class Family { PG, EG };
Family family_from_string(std::string_view s);  // "pg" / "eg"
const char* family_name(Family f);

// Singer-indexed point model of a finite geometry over GF(2^h).
//   PG(m,2^h): points are the 1-dimensional GF(2^h)-subspaces of GF(2^{h(m+1)});
//     point i <-> the class of alpha^i, n = (2^{h(m+1)}-1)/(2^h-1). All 2^h-1
//     nonzero scalar multiples of an element share one index (log mod n).
//   EG(m,2^h): points are the nonzero elements of GF(2^{hm}); point i <-> alpha^i,
//     n = 2^{hm}-1.
// Multiplication by alpha shifts indices by one in both families. A dense
// discrete-log table is built when the ambient degree is at most log_table_cap;
// larger models only support the polynomial-side operations.
class GeometryModel {
public:
    static constexpr int log_table_cap = 24;
    static constexpr int ambient_cap = 32;

    GeometryModel(Family family, int m, int h,
                  const PrimitivePolyTable& polys = PrimitivePolyTable::builtin());

    Family family;
    int m, h;
    int ambient_degree;  // h(m+1) for PG, hm for EG
    uint64_t n;          // point count
    Field scalars;       // GF(2^h)
    Field ambient;

    uint64_t q() const { return scalars.order() + 1; }
    bool has_point_index() const { return !log_.empty(); }
    uint64_t point_element(uint64_t index) const;  // alpha^index
    uint64_t point_index(uint64_t v) const;        // requires v != 0 and a log table
    // Image of a GF(2^h) element inside the ambient field.
    uint64_t embed_scalar(uint64_t c) const { return emb_[c]; }
    const std::vector<uint64_t>& scalar_images() const { return emb_; }

private:
    std::vector<uint32_t> log_;
    std::vector<uint64_t> emb_;
};

// A t-flat: for PG the GF(2^h)-span of basis (a (t+1)-dimensional vector
// subspace); for EG the coset offset + span(basis) of a t-dimensional vector
// subspace with offset outside the span (flats through the origin are excluded
// by construction).
struct Flat {
    const GeometryModel* model;
    std::vector<uint64_t> basis;  // ambient elements, GF(2^h)-independent
    uint64_t offset = 0;          // always 0 for PG
};

struct IncidenceVector {
    uint64_t n = 0;
    std::vector<uint64_t> words;

    IncidenceVector() = default;
    explicit IncidenceVector(uint64_t n_) : n(n_), words((n_ + 63) / 64, 0) {}

    bool get(uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i) { words[i >> 6] |= uint64_t{1} << (i & 63); }
    uint64_t weight() const;
    IncidenceVector complemented() const;
    IncidenceVector shifted(uint64_t s) const;  // index i -> (i+s) mod n
    BitPoly to_poly() const;                    // bit i -> coefficient of x^i
    std::string to_hex() const;                 // fixed width, bit 0 = point 0

    bool operator==(const IncidenceVector&) const = default;
};

std::vector<uint64_t> flat_points(const Flat& f);  // sorted point indices
IncidenceVector incidence_vector(const Flat& f);
std::string flat_json(const Flat& f);

// Number of t-flats: PG: gaussian binomial [m+1 choose t+1]_q;
// EG: [m choose t]_q * (q^{m-t} - 1) cosets avoiding the origin.
uint64_t pg_flat_count(int m, int h, int t);
uint64_t eg_flat_count(int m, int h, int t);

// Exhaustive enumeration via canonical reduced-echelon bases, one flat each.
void for_each_flat(const GeometryModel& model, int t,
                   const std::function<void(const Flat&)>& fn);
std::vector<Flat> enumerate_flats(const GeometryModel& model, int t);  // count cap 1e7
std::vector<Flat> sample_flats(const GeometryModel& model, int t, size_t count,
                               uint64_t seed);

// Does this 0/1 vector mark exactly the points of some t-flat?
bool is_flat_incidence(const GeometryModel& model, int t, const IncidenceVector& v);

// 2^h+2 points of AG(2,2^h) containing the origin, no three collinear:
// a conic plus its nucleus moved into the affine plane by sending an external
// line to infinity. Coordinates are GF(2^h) element representations.
std::vector<std::pair<uint64_t, uint64_t>> hyperoval(int h);

// Incidence vector of one (m-t)-dimensional subspace: a minimum-weight codeword
// support of the projective-geometry code; weight (2^{h(m-t+1)}-1)/(2^h-1).
IncidenceVector pg_min_weight_support(const GeometryModel& model, int t);

// Hyperoval-based support of weight (2^h+2)*2^{h(m-t-1)} - 1: cosets p + W over
// the hyperoval points p, W a direction subspace of vector dimension m-t-1
// meeting the hyperoval plane span{1, alpha} only in 0, minus the origin.
IncidenceVector eg_min_weight_support(const GeometryModel& model, int t);

}  // namespace qsyncgeo
