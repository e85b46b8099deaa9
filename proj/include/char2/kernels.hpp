#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "char2/mpoly.hpp"

namespace char2 {

// Data-parallel kernels, each with a serial reference used by the tests and
// the benchmark. The parallel variants assign work by index, so their output
// is identical to the serial one at every thread count.

// Products f_a * f_b over all pairs a <= b, in (a,b)-lexicographic order;
// the columns of the quadric-search matrix.
std::vector<Poly> pairwise_products_serial(std::span<const Poly> components);
std::vector<Poly> pairwise_products_parallel(std::span<const Poly> components);

// The same products for an explicit pair list; lets callers stream columns
// in chunks instead of holding all of them.
std::vector<Poly> products_for_pairs_serial(std::span<const Poly> components,
                                            std::span<const std::pair<uint32_t, uint32_t>> pairs);
std::vector<Poly> products_for_pairs_parallel(std::span<const Poly> components,
                                              std::span<const std::pair<uint32_t, uint32_t>> pairs);

std::vector<std::pair<uint32_t, uint32_t>> monomial_pairs(size_t m);

// Points of P^(m-1)(F2), as nonzero coordinate masks in increasing order, on
// which every listed quadric vanishes. Each quadric is its list of monomial
// index pairs (i <= j).
using QuadricPairs = std::vector<std::pair<uint32_t, uint32_t>>;
std::vector<uint32_t> quadric_zero_locus_serial(const std::vector<QuadricPairs>& quadrics,
                                                unsigned m);
std::vector<uint32_t> quadric_zero_locus_parallel(const std::vector<QuadricPairs>& quadrics,
                                                  unsigned m);

} // namespace char2
