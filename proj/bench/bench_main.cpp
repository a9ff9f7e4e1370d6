// Timing comparison of the parallel kernels against their serial references.
// Not a correctness gate (the test suite covers agreement); this reports how
// much the OpenMP paths buy on the machine at hand.
#include <chrono>
#include <cstdint>
#include <cstdio>

#include "qsyncgeo/algebra.hpp"
#include "qsyncgeo/codes.hpp"
#include "qsyncgeo/field.hpp"
#include "qsyncgeo/geomcodes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qsyncgeo;

namespace {

template <class F>
double seconds(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

// A deliberately low-dimension cyclic code of length 1023: the parity
// polynomial collects three cyclotomic cosets (sizes 10+10+5), so k = 25 and
// the exhaustive sweep walks 2^25 codewords.
CyclicCode sweep_code() {
    const uint64_t n = 1023;
    const Field F(10);
    BitPoly parity = BitPoly::one();
    for (uint64_t j : {uint64_t{1}, uint64_t{3}, uint64_t{33}})
        parity = parity * minimal_polynomial(j, F, F.alpha(), n);
    BitPoly g = poly_divmod(BitPoly::x_pow_n_plus_one(1023), parity).first;
    return code_from_generator(n, std::move(g));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif

    {
        IndexSet a, b;
        const double ts = seconds([&] { a = eg_index_set_serial(7, 3, 4); });
        const double tp = seconds([&] { b = eg_index_set(7, 3, 4); });
        report("index scan n=2097151", ts, tp);
        if (a.members != b.members) std::printf("  MISMATCH between kernels!\n");
    }

    {
        const CyclicCode c = sweep_code();
        uint64_t ws = 0, wp = 0;
        const double ts = seconds([&] { ws = min_weight_exhaustive_serial(c); });
        const double tp = seconds([&] { wp = min_weight_exhaustive(c); });
        report("exhaustive sweep k=25", ts, tp);
        if (ws != wp) std::printf("  MISMATCH between kernels!\n");
    }

    {
        const CyclicCode c = code_from_generator(4095, eg_generator_poly(6, 2, 5));
        WeightSearchResult r{};
        const double t = seconds([&] { r = weight_search(c, 4); });
        std::printf("%-28s %8.3f s   (found %llu, excluded up to %llu)\n",
                    "pair search n=4095 w<=4", t, static_cast<unsigned long long>(r.found),
                    static_cast<unsigned long long>(r.excluded_up_to));
    }
    return 0;
}
