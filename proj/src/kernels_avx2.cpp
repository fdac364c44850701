// AVX2 variants of the word-block kernels. Compiled unconditionally on
// x86-64 via per-function target attributes; installed only after a runtime
// CPU probe, so the binary still runs on machines without AVX2.

#include "tpk/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#define TPK_X86 1
#include <immintrin.h>
#else
#define TPK_X86 0
#endif

namespace tpk::kernels {

#if TPK_X86

namespace {

#define TPK_AVX2 __attribute__((target("avx2")))

// Per-byte popcount via nibble lookup, byte sums collapsed into the four
// 64-bit lanes with SAD.
TPK_AVX2 inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

TPK_AVX2 inline uint64_t hsum64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return (uint64_t)_mm_cvtsi128_si64(s) + (uint64_t)_mm_extract_epi64(s, 1);
}

TPK_AVX2 uint64_t popcount_avx2(const uint64_t* a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256((const __m256i*)(a + i));
        acc = _mm256_add_epi64(acc, popcount_bytes(v));
    }
    uint64_t c = hsum64(acc);
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

TPK_AVX2 uint64_t and_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                     _mm256_loadu_si256((const __m256i*)(b + i)));
        acc = _mm256_add_epi64(acc, popcount_bytes(v));
    }
    uint64_t c = hsum64(acc);
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

TPK_AVX2 void and_into_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                     _mm256_loadu_si256((const __m256i*)(b + i)));
        _mm256_storeu_si256((__m256i*)(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

TPK_AVX2 void or_into_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_or_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                    _mm256_loadu_si256((const __m256i*)(b + i)));
        _mm256_storeu_si256((__m256i*)(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

TPK_AVX2 void andnot_into_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // andnot computes ~x & y, so pass b first
        __m256i v = _mm256_andnot_si256(_mm256_loadu_si256((const __m256i*)(b + i)),
                                        _mm256_loadu_si256((const __m256i*)(a + i)));
        _mm256_storeu_si256((__m256i*)(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

TPK_AVX2 bool is_zero_avx2(const uint64_t* a, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256((const __m256i*)(a + i));
        if (!_mm256_testz_si256(v, v)) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

TPK_AVX2 bool is_subset_avx2(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        if (!_mm256_testc_si256(vb, va)) return false;  // CF = ((~b) & a) == 0
    }
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

TPK_AVX2 bool intersects_avx2(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

TPK_AVX2 bool equals_avx2(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_xor_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                     _mm256_loadu_si256((const __m256i*)(b + i)));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

constexpr Ops kAvx2Ops{
    popcount_avx2, and_popcount_avx2, and_into_avx2,  or_into_avx2,
    andnot_into_avx2, is_zero_avx2,   is_subset_avx2, intersects_avx2,
    equals_avx2,   "avx2",
};

}  // namespace

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

const Ops* avx2_ops() { return cpu_has_avx2() ? &kAvx2Ops : nullptr; }

#else

bool cpu_has_avx2() { return false; }
const Ops* avx2_ops() { return nullptr; }

#endif

}  // namespace tpk::kernels
