// Timing comparison of the counting paths: the serial reference scan, the
// OpenMP block scan, and the tableau-characterization method.
//
//   ./bench_count [n] [k] [l]      (defaults: n=9, k=4, l=4)

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "crucial/count.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace crucial;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 9;
    const int k = argc > 2 ? std::atoi(argv[2]) : 4;
    const int l = argc > 3 ? std::atoi(argv[3]) : 4;
    const PatternSpec spec(k, l);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("counting right-crucial permutations, n=%d (k,l)=(%d,%d), %d threads\n", n, k, l,
                threads);

    CountReport serial, parallel, tableau;
    const double t_serial =
        time_ms([&] { serial = count_brute_serial(n, spec, CrucialType::right); });
    const double t_parallel = time_ms([&] { parallel = count_brute(n, spec, CrucialType::right); });
    const double t_syt = time_ms([&] { tableau = count_syt(n, spec, CrucialType::right); });

    std::printf("  brute serial    %10.1f ms   count=%s\n", t_serial, serial.count.str().c_str());
    std::printf("  brute openmp    %10.1f ms   count=%s\n", t_parallel, parallel.count.str().c_str());
    std::printf("  syt             %10.1f ms   count=%s\n", t_syt, tableau.count.str().c_str());
    if (t_parallel > 0.0) std::printf("  speedup serial/openmp: %.2fx\n", t_serial / t_parallel);

    if (serial.count != parallel.count || serial.count != tableau.count) {
        std::printf("MISMATCH between methods\n");
        return 1;
    }
    return 0;
}
