// Timings of the parallel kernels against their serial references.

#include <chrono>
#include <cstdio>

#include "char2/kernels.hpp"
#include "char2/par.hpp"
#include "char2/quadideal.hpp"

using namespace char2;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn&& fn, int reps) {
    auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count() / reps;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-38s %10.2f ms %10.2f ms %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("%-38s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");
    std::printf("(parallel kernels use %d threads)\n\n", par::threads());

    {
        auto p = subpfaffian_map_param(6, FieldSpec::f2());
        auto serial = time_ms([&] { pairwise_products_serial(p.components); }, 20);
        auto parallel = time_ms([&] { pairwise_products_parallel(p.components); }, 20);
        row("pairwise products, 32 sub-Pfaffians", serial, parallel);
    }
    {
        auto p = tangential_param(subpfaffian_map_param(6, FieldSpec::f2()));
        auto serial = time_ms([&] { pairwise_products_serial(p.components); }, 5);
        auto parallel = time_ms([&] { pairwise_products_parallel(p.components); }, 5);
        row("pairwise products, tangential case", serial, parallel);
    }
    {
        auto quadrics = quadrics_vanishing(subpfaffian_map_param(5, FieldSpec::f2()));
        std::vector<QuadricPairs> pairs;
        for (auto& q : quadrics) {
            QuadricPairs qp;
            for (auto& [ab, c] : q.coeffs) qp.push_back(ab);
            pairs.push_back(std::move(qp));
        }
        auto serial = time_ms([&] { quadric_zero_locus_serial(pairs, 16); }, 20);
        auto parallel = time_ms([&] { quadric_zero_locus_parallel(pairs, 16); }, 20);
        row("zero locus scan, 10 quadrics in P^15", serial, parallel);
    }
    return 0;
}
