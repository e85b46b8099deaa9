#include "char2/kernels.hpp"

#include <algorithm>
#include <atomic>

#include "char2/par.hpp"

namespace char2::par {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int threads() {
    int t = g_threads.load();
#ifdef _OPENMP
    if (t == 0) return omp_get_max_threads();
#endif
    return t == 0 ? 1 : t;
}

bool enabled() {
#ifdef _OPENMP
    return threads() > 1;
#else
    return false;
#endif
}

} // namespace char2::par

namespace char2 {

std::vector<std::pair<uint32_t, uint32_t>> monomial_pairs(size_t m) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(m * (m + 1) / 2);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = a; b < m; ++b) pairs.emplace_back(a, b);
    return pairs;
}

std::vector<Poly> products_for_pairs_serial(std::span<const Poly> components,
                                            std::span<const std::pair<uint32_t, uint32_t>> pairs) {
    std::vector<Poly> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back(components[a] * components[b]);
    return out;
}

std::vector<Poly> products_for_pairs_parallel(std::span<const Poly> components,
                                              std::span<const std::pair<uint32_t, uint32_t>> pairs) {
    std::vector<Poly> out(pairs.size());
    par::parallel_for(pairs.size(), [&](size_t i) {
        out[i] = components[pairs[i].first] * components[pairs[i].second];
    });
    return out;
}

std::vector<Poly> pairwise_products_serial(std::span<const Poly> components) {
    return products_for_pairs_serial(components, monomial_pairs(components.size()));
}

std::vector<Poly> pairwise_products_parallel(std::span<const Poly> components) {
    return products_for_pairs_parallel(components, monomial_pairs(components.size()));
}

namespace {

bool all_quadrics_vanish(const std::vector<QuadricPairs>& quadrics, uint32_t v) {
    for (const QuadricPairs& q : quadrics) {
        unsigned acc = 0;
        for (auto [a, b] : q) acc ^= (v >> a) & (v >> b) & 1u;
        if (acc) return false;
    }
    return true;
}

} // namespace

std::vector<uint32_t> quadric_zero_locus_serial(const std::vector<QuadricPairs>& quadrics,
                                                unsigned m) {
    require(m >= 1 && m <= 24, Errc::BudgetExceeded, "point scan capped at 2^24 points");
    std::vector<uint32_t> out;
    for (uint32_t v = 1; v < (uint32_t{1} << m); ++v)
        if (all_quadrics_vanish(quadrics, v)) out.push_back(v);
    return out;
}

std::vector<uint32_t> quadric_zero_locus_parallel(const std::vector<QuadricPairs>& quadrics,
                                                  unsigned m) {
    require(m >= 1 && m <= 24, Errc::BudgetExceeded, "point scan capped at 2^24 points");
    uint32_t count = uint32_t{1} << m;
    const uint32_t block = 1024;
    uint32_t blocks = (count + block - 1) / block;
    std::vector<uint8_t> hit(count, 0);
    par::parallel_for(blocks, [&](size_t bi) {
        uint32_t lo = static_cast<uint32_t>(bi) * block;
        uint32_t hi = std::min(count, lo + block);
        for (uint32_t v = std::max(lo, uint32_t{1}); v < hi; ++v)
            hit[v] = all_quadrics_vanish(quadrics, v) ? 1 : 0;
    });
    std::vector<uint32_t> out;
    for (uint32_t v = 1; v < count; ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

} // namespace char2
