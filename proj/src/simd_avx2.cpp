// AVX2 + FMA variants of the rate-evaluation inner loops. Compiled with
// -mavx2 -mfma; callers must gate on simd::available(Backend::avx2).

#include "simd_internal.hpp"

#ifdef CAT_HAVE_AVX2

#include <immintrin.h>

namespace cat::simd {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    const __m128d sum1 = _mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2));
    return _mm_cvtsd_f64(sum1);
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

PairSums pair_reduce_avx2(const double* coeff, const double* coeff_vol, const std::int32_t* j,
                          const std::int32_t* k, std::size_t n, const double* counts) {
    __m256d acc = _mm256_setzero_pd();
    __m256d acc_vol = _mm256_setzero_pd();
    std::size_t e = 0;
    for (; e + 4 <= n; e += 4) {
        const __m128i idx_j = _mm_loadu_si128(reinterpret_cast<const __m128i*>(j + e));
        const __m128i idx_k = _mm_loadu_si128(reinterpret_cast<const __m128i*>(k + e));
        const __m256d nj = _mm256_i32gather_pd(counts, idx_j, 8);
        const __m256d nk = _mm256_i32gather_pd(counts, idx_k, 8);
        const __m256d pair = _mm256_mul_pd(nj, nk);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(coeff + e), pair, acc);
        acc_vol = _mm256_fmadd_pd(_mm256_loadu_pd(coeff_vol + e), pair, acc_vol);
    }
    double s = hsum(acc);
    double sv = hsum(acc_vol);
    for (; e < n; ++e) {
        const double pair = counts[j[e]] * counts[k[e]];
        s += coeff[e] * pair;
        sv += coeff_vol[e] * pair;
    }
    return {s, sv};
}

}  // namespace cat::simd

#endif  // CAT_HAVE_AVX2
