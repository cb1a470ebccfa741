#include "dagtopo/kernels.hpp"

#if defined(DAGTOPO_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>

namespace dagtopo::kernels {

namespace {

// All-pairs equality of one 8-lane block against another via lane rotations.
inline std::uint32_t block_match_mask(__m256i va, __m256i vb) {
    __m256i cmp = _mm256_cmpeq_epi32(va, vb);
    for (int r = 1; r < 8; ++r) {
        vb = _mm256_permutevar8x32_epi32(
            vb, _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0));
        cmp = _mm256_or_si256(cmp, _mm256_cmpeq_epi32(va, vb));
    }
    return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(cmp)));
}

}  // namespace

std::uint64_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb) {
    if (na > nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (na == 0) return 0;
    // Wildly asymmetric lists: binary search beats any streaming scheme.
    if (nb / na >= 32) return intersect_count_scalar(a, na, b, nb);

    std::uint64_t hits = 0;
    std::size_t i = 0, j = 0;
    while (i + 8 <= na && j + 8 <= nb) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
        hits += static_cast<std::uint64_t>(__builtin_popcount(block_match_mask(va, vb)));
        // Advance whichever block ends first; lists are strictly increasing,
        // so no element of the exhausted block can match beyond this point.
        std::uint32_t amax = a[i + 7], bmax = b[j + 7];
        i += (amax <= bmax) ? 8 : 0;
        j += (bmax <= amax) ? 8 : 0;
    }
    hits += intersect_count_scalar(a + i, na - i, b + j, nb - j);
    return hits;
}

}  // namespace dagtopo::kernels

#endif  // DAGTOPO_HAVE_AVX2
