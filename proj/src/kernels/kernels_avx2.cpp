#include "lrq/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace lrq::kernels::avx2 {

#if defined(__AVX2__)

void accumulate_scaled_small(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                             std::size_t n) {
    const __m256i s = _mm256_set1_epi64x(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
        // Signed 32x32 -> 64 product of the low halves.
        o = _mm256_add_epi64(o, _mm256_mul_epi32(x, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), o);
    }
    for (; i < n; ++i) out[i] += scale * src[i];
}

std::uint64_t max_abs(const std::int64_t* v, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i bias = _mm256_set1_epi64x(static_cast<std::int64_t>(0x8000000000000000ULL));
    __m256i best = zero; // biased unsigned maxima live here as |x| values
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        __m256i sign = _mm256_cmpgt_epi64(zero, x);
        __m256i a = _mm256_sub_epi64(_mm256_xor_si256(x, sign), sign);
        // Unsigned compare via sign-bit flip.
        __m256i gt = _mm256_cmpgt_epi64(_mm256_xor_si256(a, bias), _mm256_xor_si256(best, bias));
        best = _mm256_blendv_epi8(best, a, gt);
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    std::uint64_t m = 0;
    for (auto l : lanes)
        if (l > m) m = l;
    for (; i < n; ++i) {
        std::uint64_t a = v[i] < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v[i])
                                   : static_cast<std::uint64_t>(v[i]);
        if (a > m) m = a;
    }
    return m;
}

#else

// Built without AVX2; dispatch never selects these, they only keep the link whole.
void accumulate_scaled_small(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                             std::size_t n) {
    scalar::accumulate_scaled(out, scale, src, n);
}

std::uint64_t max_abs(const std::int64_t* v, std::size_t n) { return scalar::max_abs(v, n); }

#endif

} // namespace lrq::kernels::avx2
