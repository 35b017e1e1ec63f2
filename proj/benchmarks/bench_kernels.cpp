// Compares the OpenMP kernels against their serial reference loops on the
// enumeration-heavy workloads: lattice scans, oracle level classification,
// per-level hull building and the normalized-count estimator. The serial
// paths are the ones the tests validate against; this target measures what
// the parallel paths buy.

#include "okb/semigroup.hpp"
#include "okb/toric.hpp"

#include <omp.h>

#include <cstdio>

using namespace okb;

namespace {

RatVec v2(long x, long y) { return RatVec{Rational(x), Rational(y)}; }

template <typename F>
double time_once(F&& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    // Measured ceiling for compute-bound loops on this machine; memory-bound
    // kernels (the raw scan) land below it.
    {
        const long N = 400000000L;
        volatile long sink = 0;
        long s = 0;
        double ts = time_once([&] {
            long acc = 0;
            for (long i = 0; i < N; ++i) acc += i % 7;
            sink = acc;
        });
        double tp = time_once([&] {
            long acc = 0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
            for (long i = 0; i < N; ++i) acc += i % 7;
            sink = acc;
        });
        (void)s;
        row("arithmetic ceiling", ts, tp);
    }

    // Large dilate of a hexagon: a single big box scan.
    Polytope hex = convex_hull({v2(0, 0), v2(4, 0), v2(6, 2), v2(6, 5), v2(2, 5), v2(0, 3)});
    {
        std::size_t count_serial = 0, count_parallel = 0;
        double ts = time_once([&] { count_serial = lattice_points(hex, 700, Exec::serial).size(); });
        double tp = time_once(
            [&] { count_parallel = lattice_points(hex, 700, Exec::parallel).size(); });
        if (count_serial != count_parallel) {
            std::printf("MISMATCH in lattice_points: %zu vs %zu\n", count_serial, count_parallel);
            return 1;
        }
        row("lattice_points k=700", ts, tp);
    }

    // Oracle export: independent levels, each one scan + classification.
    DelzantPolytope sq({v2(0, 0), v2(6, 0), v2(0, 6), v2(6, 6)});
    ToricInput input(sq, {0, 1, 2, 3});
    GradedValuationData data_serial, data_parallel;
    {
        double ts = time_once([&] { data_serial = toric_oracle_export(input, 40, Exec::serial); });
        double tp =
            time_once([&] { data_parallel = toric_oracle_export(input, 40, Exec::parallel); });
        for (long k = 1; k <= 40; ++k)
            if (data_serial.records_at(k).size() != data_parallel.records_at(k).size()) {
                std::printf("MISMATCH in oracle export at level %ld\n", k);
                return 1;
            }
        row("toric_oracle_export k=40", ts, tp);
    }

    // Per-level hulls of the splits.
    {
        Polytope hull_serial, hull_parallel;
        double ts = time_once(
            [&] { hull_serial = body_approx(data_serial, 0, 40, Exec::serial).limit_hull; });
        double tp = time_once(
            [&] { hull_parallel = body_approx(data_serial, 0, 40, Exec::parallel).limit_hull; });
        if (!(hull_serial.vertices == hull_parallel.vertices)) {
            std::printf("MISMATCH in body_approx hulls\n");
            return 1;
        }
        row("body_approx k=40", ts, tp);
    }

    // Normalized counts across all levels.
    {
        std::vector<long> range;
        for (long m = 1; m <= 40; ++m) range.push_back(m);
        std::vector<std::pair<long, Rational>> seq_serial, seq_parallel;
        double ts = time_once(
            [&] { seq_serial = volume_limit_estimate(data_serial, 0, range, Exec::serial); });
        double tp = time_once(
            [&] { seq_parallel = volume_limit_estimate(data_serial, 0, range, Exec::parallel); });
        if (seq_serial != seq_parallel) {
            std::printf("MISMATCH in volume_limit_estimate\n");
            return 1;
        }
        row("volume_limit_estimate", ts, tp);
    }

    std::printf("all parallel kernels agree with the serial references\n");
    return 0;
}
