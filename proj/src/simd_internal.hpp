#pragma once

#include "cat/simd.hpp"

namespace cat::simd {

double dot_scalar(const double* a, const double* b, std::size_t n);
PairSums pair_reduce_scalar(const double* coeff, const double* coeff_vol, const std::int32_t* j,
                            const std::int32_t* k, std::size_t n, const double* counts);

#ifdef CAT_HAVE_AVX2
double dot_avx2(const double* a, const double* b, std::size_t n);
PairSums pair_reduce_avx2(const double* coeff, const double* coeff_vol, const std::int32_t* j,
                          const std::int32_t* k, std::size_t n, const double* counts);
#endif

}  // namespace cat::simd
