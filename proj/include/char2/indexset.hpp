#pragma once
#include <string>

#include <bit>
#include <cstdint>
#include <vector>

#include "char2/error.hpp"

namespace char2 {

// A subset of {1,..,n} encoded as a bitmask: bit i-1 <=> element i. The
// integer value of the mask is the coordinate index used throughout for the
// 2^n minor/Pfaffian coordinates.
using IndexSet = uint32_t;

namespace iset {

inline int size(IndexSet s) { return std::popcount(s); }

inline bool contains(IndexSet s, unsigned element) {
    return (s >> (element - 1)) & 1u;
}

inline IndexSet insert(IndexSet s, unsigned element) { return s | (1u << (element - 1)); }
inline IndexSet erase(IndexSet s, unsigned element) { return s & ~(1u << (element - 1)); }

inline IndexSet full(unsigned n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Elements in increasing order.
inline std::vector<unsigned> elements(IndexSet s) {
    std::vector<unsigned> out;
    for (unsigned e = 1; s; ++e, s >>= 1)
        if (s & 1u) out.push_back(e);
    return out;
}

inline unsigned max_element(IndexSet s) {
    return 32u - static_cast<unsigned>(std::countl_zero(s));
}

inline unsigned min_element(IndexSet s) {
    return static_cast<unsigned>(std::countr_zero(s)) + 1u;
}

// Zero-based position of `element` within the sorted elements of s.
inline int position(IndexSet s, unsigned element) {
    return std::popcount(s & ((1u << (element - 1)) - 1u));
}

// I for even |I|, I + {n+1} for odd |I|; always an even subset of {1..n+1}.
inline IndexSet tilde(IndexSet I, unsigned n) {
    require((I & ~full(n)) == 0, Errc::OutOfRange, "subset not contained in {1..n}");
    return (size(I) % 2 == 0) ? I : insert(I, n + 1);
}

inline std::string to_string(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (unsigned e : elements(s)) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(e);
    }
    return out + "}";
}

} // namespace iset

} // namespace char2
