// Benchmark: serial reference counting kernel vs the OpenMP-parallel kernel.
// Both must agree on every count; timings and speedup are printed per field.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dworkhg/dwork.hpp"

using namespace dworkhg;
using clock_type = std::chrono::steady_clock;

static double seconds(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    // grid: (p, e, d, number of lambdas to time)
    struct Case {
        uint32_t p, e, d, nlam;
    };
    std::vector<Case> cases = {
        {13, 1, 4, 12}, {41, 1, 4, 8}, {11, 2, 4, 6}, {11, 1, 5, 5}, {7, 2, 3, 8}};
    if (argc > 1 && std::string(argv[1]) == "--quick") cases.resize(2);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%8s %4s %6s | %12s %12s %8s\n", "q", "d", "lams", "serial_s", "parallel_s",
                "speedup");

    int bad = 0;
    for (const auto& c : cases) {
        FieldContext F = build_field(c.p, c.e);
        std::vector<elem> lams;
        for (elem l = 1; l < F.q && lams.size() < c.nlam; ++l) lams.push_back(l);

        auto t0 = clock_type::now();
        std::vector<int64_t> a;
        for (elem l : lams) a.push_back(count_naive_serial(F, c.d, l));
        auto t1 = clock_type::now();
        std::vector<int64_t> b;
        for (elem l : lams) b.push_back(count_naive(F, c.d, l));
        auto t2 = clock_type::now();

        if (a != b) {
            ++bad;
            std::printf("MISMATCH at q=%u d=%u\n", F.q, c.d);
            continue;
        }
        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%8u %4u %6zu | %12.4f %12.4f %8.2f\n", F.q, c.d, lams.size(), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return bad == 0 ? 0 : 1;
}
