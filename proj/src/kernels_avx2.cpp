// AVX2 kernels. Multiplication by the fixed scalar c uses Shoup's trick:
// with cq = floor(c * 2^32 / p) precomputed, for x < p
//
//     q = mulhi32(cq, x),  r = (c*x - q*p) mod 2^32  =>  r in [0, 2p)
//
// valid for any p <= 2^31 - 1. A final conditional subtract (as unsigned min)
// brings r into [0, p). Lane layout: 32-bit mulhi is assembled from two
// 32x32->64 multiplies on the even/odd lanes.

#include "kothe/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace kothe::la::kern::avx2_impl {

namespace {

inline __m256i mulhi_u32(__m256i a, __m256i b) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    return _mm256_blend_epi32(even, odd, 0xAA);
}

// value in [0, 2p) -> [0, p)
inline __m256i reduce_once(__m256i v, __m256i pv) {
    return _mm256_min_epu32(v, _mm256_sub_epi32(v, pv));
}

}  // namespace

void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    c %= p;
    const uint32_t cq = static_cast<uint32_t>((static_cast<uint64_t>(c) << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i cqv = _mm256_set1_epi32(static_cast<int>(cq));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i zv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(const_cast<uint32_t*>(z + i)));
        __m256i q = mulhi_u32(cqv, yv);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(cv, yv), _mm256_mullo_epi32(q, pv));
        r = reduce_once(r, pv);
        __m256i s = reduce_once(_mm256_add_epi32(zv, r), pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(z + i), s);
    }
    if (i < n) scalar_impl::axpy(z + i, y + i, c, n - i, p);
}

void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p) {
    c %= p;
    const uint32_t cq = static_cast<uint32_t>((static_cast<uint64_t>(c) << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i cqv = _mm256_set1_epi32(static_cast<int>(cq));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i zv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z + i));
        __m256i q = mulhi_u32(cqv, zv);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(cv, zv), _mm256_mullo_epi32(q, pv));
        r = reduce_once(r, pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(z + i), r);
    }
    if (i < n) scalar_impl::scale(z + i, c, n - i, p);
}

void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) {
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i zv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z + i));
        __m256i s = reduce_once(_mm256_add_epi32(zv, yv), pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(z + i), s);
    }
    if (i < n) scalar_impl::add(z + i, y + i, n - i, p);
}

void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) {
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i zv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z + i));
        // z - y, then add p back where it underflowed
        __m256i d = _mm256_sub_epi32(zv, yv);
        __m256i fixed = _mm256_add_epi32(d, pv);
        __m256i s = _mm256_min_epu32(d, fixed);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(z + i), s);
    }
    if (i < n) scalar_impl::sub(z + i, y + i, n - i, p);
}

}  // namespace kothe::la::kern::avx2_impl

#endif  // __x86_64__
