#include "cat/simd.hpp"

#include "simd_internal.hpp"

namespace cat::simd {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

PairSums pair_reduce_scalar(const double* coeff, const double* coeff_vol, const std::int32_t* j,
                            const std::int32_t* k, std::size_t n, const double* counts) {
    double s = 0.0;
    double sv = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
        const double pair = counts[j[e]] * counts[k[e]];
        s += coeff[e] * pair;
        sv += coeff_vol[e] * pair;
    }
    return {s, sv};
}

namespace {

const Ops kScalarOps{&dot_scalar, &pair_reduce_scalar};

#ifdef CAT_HAVE_AVX2
const Ops kAvx2Ops{&dot_avx2, &pair_reduce_avx2};
#endif

bool cpu_has_avx2() {
#if defined(CAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

}  // namespace

Backend detect() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

bool available(Backend backend) {
    switch (backend) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

const Ops& ops(Backend backend) {
#ifdef CAT_HAVE_AVX2
    if (backend == Backend::avx2 && cpu_has_avx2()) {
        return kAvx2Ops;
    }
#else
    (void)backend;
#endif
    return kScalarOps;
}

}  // namespace cat::simd
