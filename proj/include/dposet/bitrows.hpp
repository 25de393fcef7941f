#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dposet {

// Fixed-width bit rows stored as little chunks of a flat word array.
// A "row" is `stride` consecutive uint64 words; bit i lives in word i/64
// at position i%64. All layer-local adjacency in this library is kept in
// this form so that common-neighbor counts are popcounts.

inline int words_for_bits(int nbits) { return (nbits + 63) / 64; }

inline void row_set(uint64_t* row, int i) { row[i >> 6] |= uint64_t{1} << (i & 63); }

inline bool row_test(const uint64_t* row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1;
}

inline int row_popcount(const uint64_t* row, int stride) {
    int c = 0;
    for (int w = 0; w < stride; ++w) c += std::popcount(row[w]);
    return c;
}

inline int row_intersect_count(const uint64_t* a, const uint64_t* b, int stride) {
    int c = 0;
    for (int w = 0; w < stride; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

// Orders rows by the index of the first differing bit; the row that is 0
// there is smaller. Canonical forms minimize concatenations of rows under
// this order.
inline int row_compare(const uint64_t* a, const uint64_t* b, int stride) {
    for (int w = 0; w < stride; ++w) {
        if (a[w] != b[w]) {
            int bit = std::countr_zero(a[w] ^ b[w]);
            return ((a[w] >> bit) & 1) ? 1 : -1;
        }
    }
    return 0;
}

inline bool row_equal(const uint64_t* a, const uint64_t* b, int stride) {
    for (int w = 0; w < stride; ++w)
        if (a[w] != b[w]) return false;
    return true;
}

// Visits set bits in ascending index order.
template <typename Fn>
inline void row_for_each(const uint64_t* row, int stride, Fn&& fn) {
    for (int w = 0; w < stride; ++w) {
        uint64_t word = row[w];
        while (word) {
            int bit = std::countr_zero(word);
            fn(w * 64 + bit);
            word &= word - 1;
        }
    }
}

}  // namespace dposet
