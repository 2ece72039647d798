// Benchmark of the OpenMP kernels against their serial references:
// truncated series product and Weyl alternant accumulation.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "superchar/series.hpp"
#include "superchar/weyl.hpp"

using namespace superchar;
using Clock = std::chrono::steady_clock;

namespace {

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PowerSeries random_series(const SeriesShape& sh, size_t terms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> xexp(-3, 3);
    PowerSeries s(sh);
    for (size_t t = 0; t < terms; ++t) {
        ExpVec e(sh.width(), 0);
        for (int i = 0; i < sh.p; ++i) e[1 + i] = xexp(rng);
        int budget = sh.cap;
        for (int i = 0; i < sh.m + sh.n; ++i) {
            std::uniform_int_distribution<int> part(0, budget);
            int v = part(rng);
            e[1 + sh.p + i] = v;
            budget -= v;
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        s.add_term(e, c);
    }
    s.normalize();
    return s;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    // Kernel 1: truncated sparse series product.
    SeriesShape sh;
    sh.p = 2;
    sh.m = 3;
    sh.n = 2;
    sh.cap = 14;
    PowerSeries a = random_series(sh, 4000, 1);
    PowerSeries b = random_series(sh, 4000, 2);
    auto t0 = Clock::now();
    PowerSeries ps = series_mul_serial(a, b);
    double ts = secs_since(t0);
    t0 = Clock::now();
    PowerSeries pp = series_mul_parallel(a, b);
    double tp = secs_since(t0);
    bool ok1 = ps == pp;
    std::printf("series_mul     %zu x %zu -> %zu terms | serial %.3fs parallel %.3fs %s\n",
                a.term_count(), b.term_count(), ps.term_count(), ts, tp,
                ok1 ? "(identical)" : "(MISMATCH)");

    // Kernel 2: alternant accumulation over the Weyl group.
    RootSystemCase rs{Family::C, 8};
    std::vector<long long> w(8);
    for (int i = 0; i < 8; ++i) w[i] = 2 * (12 - i);
    GeneralizedVector tau{std::vector<long long>(w)};
    t0 = Clock::now();
    auto as = alternant_serial(rs, tau);
    double as_t = secs_since(t0);
    t0 = Clock::now();
    auto ap = alternant_parallel(rs, tau);
    double ap_t = secs_since(t0);
    bool ok2 = as == ap;
    std::printf("alternant C8   %zu terms            | serial %.3fs parallel %.3fs %s\n",
                as.size(), as_t, ap_t, ok2 ? "(identical)" : "(MISMATCH)");

    return ok1 && ok2 ? 0 : 1;
}
