// AVX2 variants of the GF(2) row kernels.  This translation unit is the only
// one compiled with -mavx2; callers reach it through the dispatch table in
// bitops.cpp, so the rest of the library stays runnable on any x86-64.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "homcert/bitops.hpp"

namespace homcert::bitops::avx2 {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i)
        dst[i] ^= src[i];
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i z = _mm256_and_si256(x, y);
        // No AVX2 popcount; four scalar popcnts on the extracted lanes keep
        // the loop memory-bound anyway.
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(
            static_cast<std::uint64_t>(_mm256_extract_epi64(z, 0))));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(
            static_cast<std::uint64_t>(_mm256_extract_epi64(z, 1))));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(
            static_cast<std::uint64_t>(_mm256_extract_epi64(z, 2))));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(
            static_cast<std::uint64_t>(_mm256_extract_epi64(z, 3))));
    }
    for (; i < nwords; ++i)
        total += static_cast<std::uint64_t>(
            _mm_popcnt_u64(a[i] & b[i]));
    return total;
}

bool is_zero(const std::uint64_t* a, std::size_t nwords) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_or_si256(acc, x);
    }
    if (!_mm256_testz_si256(acc, acc))
        return false;
    std::uint64_t tail = 0;
    for (; i < nwords; ++i)
        tail |= a[i];
    return tail == 0;
}

}  // namespace homcert::bitops::avx2

#endif  // x86
