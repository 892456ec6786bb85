// Compares the naive serial enumerator with the pruned OpenMP enumerator
// on growing boxes. The naive scan is O(alpha^3 * euler^2) and is only
// run on boxes it can finish; the pruned scan continues beyond that.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "s2s5/search.hpp"

using namespace s2s5;
using Clock = std::chrono::steady_clock;

static double run_ms(std::vector<Witness> (*fn)(const SearchBox&), const SearchBox& box,
                     size_t* count) {
    auto t0 = Clock::now();
    auto ws = fn(box);
    auto t1 = Clock::now();
    *count = ws.size();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main() {
#ifdef _OPENMP
    std::printf("workers: %d\n", omp_get_max_threads());
#else
    std::printf("workers: 1 (no OpenMP)\n");
#endif
    std::printf("%-10s %7s %7s %10s %12s %12s %8s\n", "family", "alpha", "euler",
                "witnesses", "naive ms", "pruned ms", "speedup");

    for (Family fam : {Family::Plumbing, Family::Cp2}) {
        const char* name = fam == Family::Plumbing ? "plumbing" : "cp2";
        const long long naive_cap = fam == Family::Plumbing ? 8 : 60;
        for (long long b : {2, 4, 8, 16, 60}) {
            if (fam == Family::Plumbing && b > 16)
                continue;
            SearchBox box{b, b, fam};
            size_t n_pruned = 0, n_naive = 0;
            double pruned = run_ms(&enumerate_witnesses, box, &n_pruned);
            if (b <= naive_cap) {
                double naive = run_ms(&enumerate_witnesses_naive, box, &n_naive);
                if (n_naive != n_pruned) {
                    std::printf("MISMATCH: naive %zu vs pruned %zu\n", n_naive,
                                n_pruned);
                    return 1;
                }
                std::printf("%-10s %7lld %7lld %10zu %12.2f %12.2f %7.1fx\n", name, b,
                            b, n_pruned, naive, pruned, naive / pruned);
            } else {
                std::printf("%-10s %7lld %7lld %10zu %12s %12.2f %8s\n", name, b, b,
                            n_pruned, "-", pruned, "-");
            }
        }
    }
    return 0;
}
