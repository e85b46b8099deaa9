#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace char2::par {

// Thread count used by the parallel kernels; 0 restores the OpenMP default.
// Deterministic outputs are required at every setting: parallel loops write
// to preassigned slots and all merges happen in index order.
void set_threads(int n);
int threads();
bool enabled();

template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
#ifdef _OPENMP
    if (enabled() && count > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads())
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<size_t>(i));
        return;
    }
#endif
    for (size_t i = 0; i < count; ++i) fn(i);
}

} // namespace char2::par
